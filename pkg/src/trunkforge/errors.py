"""Exception hierarchy shared by every trunkforge module."""


class TrunkforgeError(Exception):
    pass


class WordSyntaxError(TrunkforgeError, ValueError):
    """Unknown token in a Morse word text."""

    def __init__(self, message, token_index=None):
        super().__init__(message)
        self.token_index = token_index


class WordValidationError(TrunkforgeError, ValueError):
    """An event is illegal at its slice, or the diagram does not close.

    ``event_index`` is 1-based, matching what a user sees when counting
    tokens in the input text.
    """

    def __init__(self, message, event_index=None):
        super().__init__(message)
        self.event_index = event_index


class LinkRejectedError(TrunkforgeError, ValueError):
    """A multi-component word was given where a knot is required."""

    def __init__(self, components):
        super().__init__(
            f"word has {components} components; a knot (1 component) is required "
            "(links must be allowed explicitly)"
        )
        self.components = components


class InvalidProfileError(TrunkforgeError, ValueError):
    pass


class InvalidDecompositionError(TrunkforgeError, ValueError):
    pass


class InconsistencyError(TrunkforgeError, AssertionError):
    """Two independent computations of the same quantity disagree.

    Never raised for valid input unless the library itself is broken.
    """


class CatalogError(TrunkforgeError, ValueError):
    pass


class UnknownEntryError(CatalogError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown catalog entry"


class InapplicableMoveError(TrunkforgeError, ValueError):
    pass


class FrontierCapError(TrunkforgeError, RuntimeError):
    """Breadth-first enumeration grew past its configured frontier cap."""
