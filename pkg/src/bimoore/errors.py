"""Exception hierarchy. Every error carries a short machine-readable ``code``."""


class BimooreError(Exception):
    code = "ERROR"


class RegularCaseError(BimooreError):
    code = "REGULAR_CASE"


class ParamMismatch(BimooreError):
    code = "PARAM_MISMATCH"


class UnsupportedOrder(BimooreError):
    code = "UNSUPPORTED_ORDER"


class NotRegular(BimooreError):
    code = "NOT_REGULAR"


class BadMultiplicity(BimooreError):
    code = "BAD_MULTIPLICITY"


class TooSmall(BimooreError):
    code = "TOO_SMALL"


class UnsupportedResidue(BimooreError):
    code = "UNSUPPORTED_RESIDUE"


class NeedsInput(BimooreError):
    code = "NEEDS_INPUT"


class TooLarge(BimooreError):
    code = "TOO_LARGE"


class BadSpectralSymmetry(BimooreError):
    code = "BAD_SPECTRAL_SYMMETRY"


class NotApplicable(BimooreError):
    code = "NOT_APPLICABLE"


class Graph6Error(BimooreError):
    code = "GRAPH6_DECODE"

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
