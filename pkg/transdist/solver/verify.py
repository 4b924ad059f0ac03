from collections.abc import Iterable
from fractions import Fraction

from transdist.perm.models import Permutation, Transposition
from transdist.tree.metric import TreeMetric, check_size, displacement_units, inefficiency_units


class VerificationReport:
    """
    Outcome of checking a claimed decomposition of p.

    The transpositions are applied in sorting order (last one first) starting from p, and the
    inefficiency of every step is accumulated. With `residual` the displacement left at the end,
    `2 * total_weight - displacement + residual == inefficiency_sum` holds for any sequence;
    when the product matches, the residual is zero and `gap == inefficiency_sum / 2`.
    """

    __slots__ = (
        "product_matches",
        "total_weight",
        "displacement",
        "gap",
        "inefficiency_sum",
        "residual",
        "identity_holds",
        "steps",
        "efficient_steps",
    )

    def __init__(
        self,
        product_matches: bool,
        total_weight: Fraction,
        displacement: Fraction,
        inefficiency_sum: Fraction,
        residual: Fraction,
        steps: int,
        efficient_steps: int,
    ):
        self.product_matches = product_matches
        self.total_weight = total_weight
        self.displacement = displacement
        self.gap = total_weight - displacement / 2
        self.inefficiency_sum = inefficiency_sum
        self.residual = residual
        self.identity_holds = 2 * total_weight - displacement + residual == inefficiency_sum
        self.steps = steps
        self.efficient_steps = efficient_steps

    @property
    def ok(self) -> bool:
        return self.product_matches and self.identity_holds and self.gap * 2 == self.inefficiency_sum

    def __repr__(self) -> str:
        return (
            f"VerificationReport(product_matches={self.product_matches}, total_weight={self.total_weight}, "
            f"gap={self.gap}, inefficiency_sum={self.inefficiency_sum})"
        )


def verify_transform(t: TreeMetric, p: Permutation, taus: Iterable[Transposition]) -> VerificationReport:
    """
    Checks that taus multiply to p and measures how far the decomposition is from D(p) / 2.

    Parameters:
        t: The tree metric.
        p: The permutation the transpositions should decompose.
        taus: Claimed decomposition, multiplied left to right.

    Returns:
        VerificationReport: Failures are flagged in the report, nothing is raised for a wrong sequence.

    Raises:
        SizeMismatch: If p does not act on the tree's vertex set.
        ElementOutOfRange: If a transposition does not fit in [1, n].
    """

    check_size(t, p)
    taus = list(taus)
    product_matches = Permutation.from_transpositions(p.n, taus) == p

    current = p
    total = 0
    waste = 0
    efficient = 0
    for tau in reversed(taus):
        step = inefficiency_units(t, current, tau)
        waste += step
        efficient += step == 0
        total += t.phi_units(tau.a, tau.b)
        current = current.swap(tau.a, tau.b)

    return VerificationReport(
        product_matches=product_matches,
        total_weight=t.weight(total),
        displacement=t.weight(displacement_units(t, p)),
        inefficiency_sum=t.weight(waste),
        residual=t.weight(displacement_units(t, current)),
        steps=len(taus),
        efficient_steps=efficient,
    )
