"""Construct disorder laws from configuration entries."""

from dataclasses import replace

from ..config import DistributionType
from ..errors import ParameterError
from .base import DisorderLaw
from .laws import CauchyLaw, ConstantLaw, GaussianLaw, UniformLaw


def law_from_spec(kind: str | DistributionType, p1: float = 0.0, p2: float = 1.0,
                 tau: float | None = None) -> DisorderLaw:
    """Build a law from the ``distribution = {type, p1, p2, tau}`` config table.

    Parameter meaning per type:
    - cauchy: center, scale
    - uniform: lower end, upper end
    - gaussian: mean, variance
    - constant: value (p2 ignored)

    tau overrides the moment exponent of the law when given.

    Raises:
        ParameterError: If the type is unknown or the parameters are invalid

    Example:
        law = law_from_spec("cauchy", 0.0, 1.0)
    """
    try:
        family = DistributionType(kind) if not isinstance(kind, DistributionType) else kind
    except ValueError:
        raise ParameterError(f"Unknown distribution type: {kind}") from None

    constructor_map = {
        DistributionType.CAUCHY: lambda: CauchyLaw(float(p1), float(p2)),
        DistributionType.UNIFORM: lambda: UniformLaw(float(p1), float(p2)),
        DistributionType.GAUSSIAN: lambda: GaussianLaw(float(p1), float(p2)),
        DistributionType.CONSTANT: lambda: ConstantLaw(float(p1)),
    }
    law = constructor_map[family]()
    if tau is not None:
        law = replace(law, tau=float(tau))
    return law
