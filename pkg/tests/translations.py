"""Order-preserving translations between the systems, used as oracles.

ε_X over fin:n sits inside φ(1+X)0 over fin:1: ε_k is φ_{x0}(k) for the
finite ordinal k, and ω^a is φ_⊥(a).  φ(1+X)0 sits inside Γ_X below Γ_0:
φ_⊥ is φ_0 and φ_x is φ_{1+x} with 1+x written as a finite ordinal.
"""

from __future__ import annotations

from bhfix import epsilon, gamma, veblen


def nat_veb(k: int):
    return veblen.from_summands((veblen.ONE,) * k)


def nat_gamma(k: int):
    return gamma.from_summands((gamma.ONE,) * k)


def eps_to_veb(t):
    if isinstance(t, epsilon.Zero):
        return veblen.ZERO
    if isinstance(t, epsilon.Eps):
        return veblen.Phi(0, nat_veb(t.x))
    parts = (veblen.omega_pow(eps_to_veb(e)) for e in epsilon.view(t))
    return veblen.from_summands(tuple(p for q in parts for p in veblen.summands(q)))


def veb_to_gamma(t):
    if isinstance(t, veblen.Zero):
        return gamma.ZERO
    if isinstance(t, veblen.Phi):
        index = gamma.ZERO if t.index is None else nat_gamma(1 + t.index)
        return gamma.Phi(index, veb_to_gamma(t.arg))
    return gamma.from_summands(tuple(veb_to_gamma(p) for p in veblen.summands(t)))
