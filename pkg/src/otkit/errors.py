"""Exception hierarchy shared by all otkit stages."""


class OtkitError(Exception):
    """Base class for every error the pipeline reports to the user."""


class GrammarSyntaxError(OtkitError):
    def __init__(self, message, line=None, source_name=None):
        self.message = message
        self.line = line
        self.source_name = source_name
        where = source_name or "<grammar>"
        if line is not None:
            where = f"{where}:{line}"
        super().__init__(f"{where}: {message}")


class UnknownMarkerError(OtkitError):
    def __init__(self, marker):
        self.marker = marker
        super().__init__(f"{marker} triggers no rule in the grammar")


class LeftRecursionError(OtkitError):
    pass


class ScriptSyntaxError(OtkitError):
    def __init__(self, message, name=None, line=None, column=None):
        self.message = message
        self.name = name
        self.line = line
        self.column = column
        where = name or "<script>"
        if line is not None:
            where = f"{where}:{line}"
            if column is not None:
                where = f"{where}:{column}"
        super().__init__(f"{where}: {message}")


class PatternSyntaxError(OtkitError):
    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        super().__init__(message if position is None else f"{message} (at offset {position})")


class MalformedLineError(OtkitError):
    def __init__(self, message, line_number=None):
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(prefix + message)


class FlatParseError(OtkitError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at column {position + 1}")
