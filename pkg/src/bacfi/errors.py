"""Exception hierarchy shared across the package.

Two branches matter for the command line frontend: :class:`InputError`
(malformed or invalid data, exit code 1) and :class:`Inapplicable` (the
computation is well posed but its hypotheses fail for this input, exit
code 2).  Everything else is an internal failure.
"""


class BacfiError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BacfiError):
    """Invalid or malformed input data."""


class Inapplicable(BacfiError):
    """Hypotheses of the requested computation are not satisfied."""


# -- surface documents -------------------------------------------------

class MalformedDocument(InputError):
    """Document does not match the expected JSON shape."""


class NotAPermutation(InputError):
    """An adjacency array is not a bijection of {0, ..., n-1}."""


class BacfiViolation(InputError):
    """The north-east move applied twice does not return to the start."""


class NotConnected(InputError):
    """The squares do not form a single connected surface."""


class ExponentNotCylinderConstant(InputError):
    """An exponent array is not constant along its cylinder."""


class ExponentTooSmall(InputError):
    """A cylinder has exponent * width < 2."""


# -- chain maps ---------------------------------------------------------

class SurfaceMismatch(InputError):
    """Chain maps to be composed live on different surfaces."""


class ChainMapInvalid(BacfiError):
    """A chain map fails to commute with the boundary operator."""


# -- polynomials --------------------------------------------------------

class ZeroPolynomial(InputError):
    """The zero polynomial was passed where a nonzero one is required."""


class NotSquareFree(InputError):
    """A square-free polynomial is required; pass its square-free part."""


class NoRealRootGreaterThanOne(Inapplicable):
    """The polynomial has no real root > 1, so it cannot belong to a
    stretch factor."""


class NonConvergence(BacfiError):
    """The floating-point root finder failed to converge."""


# -- 2x2 words ----------------------------------------------------------

class NotSL2(InputError):
    """The matrix does not have determinant 1."""


class TraceTooSmall(Inapplicable):
    """Trace <= 2: periodic or reducible torus mapping class."""


class NotGenusOne(Inapplicable):
    """A genus-one surface is required."""


# -- divides ------------------------------------------------------------

class NotFourValent(InputError):
    """A fat-graph vertex has valence other than 4 (or 2 for U-turns)."""


class NotCheckerboardColorable(InputError):
    """The complementary faces of the fat graph admit no 2-coloring."""


class UTurnUnsupported(Inapplicable):
    """The divide passes through order-2 points, which the train-track
    construction does not cover."""
