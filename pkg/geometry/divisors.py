"""
Divisor Systems

Offset arithmetic on facet systems: the zero divisor of a character and the
shifted systems D_P - a (div chi^u)_0 used by the minimum-distance bounds.
Normals never change; only offsets do.
"""

from typing import Sequence

from utils.errors import InputError

from .polytopes import HalfspaceSystem, pairing


def char_zero_divisor_system(H: HalfspaceSystem, u: Sequence[int]) -> HalfspaceSystem:
    """Offsets max(<u, v_F>, 0): the polytope of the zeros of chi^u on the fan of H."""
    return H.with_offsets([max(pairing(u, n), 0) for n in H.normals])


def divisor_shift_system(H: HalfspaceSystem, u: Sequence[int], a: int) -> HalfspaceSystem:
    """Offsets a_F - a * max(<u, v_F>, 0). An empty region is left for the caller to detect."""
    if a < 0:
        raise InputError(f"divisor shift must be nonnegative, got {a}")
    return H.with_offsets(
        [h.offset - a * max(pairing(u, h.normal), 0) for h in H.rows]
    )
