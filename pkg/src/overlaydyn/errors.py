"""Exception hierarchy shared by all overlaydyn modules."""


class OverlayDynError(ValueError):
    """Base class for input errors raised by overlaydyn."""


class MalformedRow(OverlayDynError):
    pass


class ValueOutOfRange(OverlayDynError):
    pass


class AsymmetricInput(OverlayDynError):
    pass


class DuplicateCategoryDeclaration(OverlayDynError):
    pass


class UnknownCategory(OverlayDynError, KeyError):
    """One or more category ids are not part of the basemap.

    ``categories`` holds every offending id, sorted.
    """

    def __init__(self, categories):
        if isinstance(categories, str):
            categories = [categories]
        self.categories = sorted(set(categories))
        super().__init__("unknown categories: " + ", ".join(self.categories))

    def __str__(self):
        return self.args[0]


class MalformedRecord(OverlayDynError):
    pass


class DuplicateDocId(OverlayDynError):
    pass


class UnknownDoc(OverlayDynError, KeyError):
    def __init__(self, doc_ids):
        if isinstance(doc_ids, str):
            doc_ids = [doc_ids]
        self.doc_ids = sorted(set(doc_ids))
        super().__init__("unknown documents: " + ", ".join(self.doc_ids))

    def __str__(self):
        return self.args[0]


class SeedNotInStore(OverlayDynError):
    pass


class InvariantViolation(RuntimeError):
    """An internal consistency check failed (a bug, not bad input)."""
