"""Exception types shared across planeweave."""


class PlaneweaveError(Exception):
    """Base class for all library errors."""


class PreconditionError(PlaneweaveError, ValueError):
    pass


class OverlapError(PlaneweaveError, ValueError):
    """Two segments share a collinear piece of positive length."""


class DegenerateInput(PlaneweaveError, ValueError):
    pass


class NotTwoDegenerate(PlaneweaveError, ValueError):
    """Peeling stalled: the remaining subgraph has minimum degree >= 3."""

    def __init__(self, remaining):
        self.remaining = sorted(remaining)
        super().__init__(
            f"graph is not 2-degenerate; {len(self.remaining)} vertices left with degree >= 3"
        )


class SizeOverflow(PlaneweaveError, ValueError):
    pass


class UnknownVertex(PlaneweaveError, KeyError):
    pass


class ShapeMismatch(PlaneweaveError, ValueError):
    pass


class NotAllCrossing(PlaneweaveError, ValueError):
    def __init__(self, red, blue):
        self.red, self.blue = red, blue
        super().__init__(f"red segment {red} does not cross blue segment {blue}")


class CollinearInput(PlaneweaveError, ValueError):
    pass


class IncompleteColoring(PlaneweaveError, ValueError):
    pass


class InvalidCertificate(PlaneweaveError, ValueError):
    pass


class ParseError(PlaneweaveError, ValueError):
    pass
