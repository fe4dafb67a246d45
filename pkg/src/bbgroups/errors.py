"""Shared exception types."""


class ParseError(ValueError):
    """Syntax error in a text input (graph, word, or presentation file).

    Carries an optional 1-based line/column so callers can point at the
    offending token.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        elif column is not None:
            message = f"column {column}: {message}"
        super().__init__(message)
