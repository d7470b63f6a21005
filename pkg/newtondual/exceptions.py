class AmbientMismatchException(Exception):
    pass


class TrivialIdealException(Exception):
    pass


class NotDeterminedException(Exception):
    pass


class NotEquigeneratedException(Exception):
    pass


class NotStableException(Exception):
    pass


class NotSquarefreeException(Exception):
    pass


class InvalidMoveException(Exception):
    pass


class InvalidPartitionException(Exception):
    pass


class DisconnectedDiagramException(Exception):
    pass


class IncompatibleDiagramException(Exception):
    pass


class IncidenceException(Exception):
    pass


class NonMinimalException(Exception):
    pass


class ScaleGuardException(Exception):
    pass


class EmptyGraphException(Exception):
    pass


class SpecializationException(Exception):
    pass


class ParseException(Exception):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
