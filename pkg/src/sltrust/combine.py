"""The trust-confidence combination operator.

Given a trustworthiness opinion T and a confidence opinion C, the
combination projects C into the sub-triangle spanned by T, D, and U and
adds the resulting displacement to T:

- C's direction from B is rescaled into the angular span of T's view of
  the DU edge (the angle at T in triangle TDU), measured from the T->D
  direction;
- C's relative magnitude r = |B->C| / |B->M_C| scales the distance from
  T to the DU edge along that direction.

Full-belief confidence therefore leaves T unchanged (r = 0), full
disbelief lands on D's vertex, full uncertainty on U's, and the result's
belief can never exceed T's: the displacement only ever points away from
the B vertex.  Degenerate T on the DU edge collapses the sub-triangle;
there the displacement length is zero and the result is T itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._kernels import reference as _ref
from .opinion import Opinion, make_opinion

__all__ = ["CombinationTrace", "combine", "combine_traced"]


@dataclass(frozen=True)
class CombinationTrace:
    """Intermediates of one combination, for diagnostics and debugging.

    ``t_to_cprime_len`` is ``r_c * t_to_m_len`` by construction.
    """

    alpha_c: float
    alpha_c_prime: float
    r_c: float
    t_to_m_len: float
    t_to_cprime_len: float
    result: Opinion

    def to_dict(self) -> dict:
        return {
            "alpha_c": self.alpha_c,
            "alpha_c_prime": self.alpha_c_prime,
            "r_c": self.r_c,
            "t_to_m_len": self.t_to_m_len,
            "t_to_cprime_len": self.t_to_cprime_len,
        }


def combine_traced(trust: Opinion, confidence: Opinion) -> CombinationTrace:
    """Combine and expose the intermediate quantities."""
    wb, wd, wu, alpha_c, alpha_cp, r_c, reach, shift = _ref.combine_elem(
        *trust.components(), *confidence.components()
    )
    return CombinationTrace(
        alpha_c=alpha_c,
        alpha_c_prime=alpha_cp,
        r_c=r_c,
        t_to_m_len=reach,
        t_to_cprime_len=shift,
        result=make_opinion(wb, wd, wu),
    )


def combine(trust: Opinion, confidence: Opinion) -> Opinion:
    """Combine trustworthiness T with confidence C; total on valid opinions."""
    return combine_traced(trust, confidence).result
