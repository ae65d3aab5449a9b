"""Schubert calculus on isotropic Grassmannians.

Sums are returned as dicts mapping partitions (tuples) to Fractions.
"""

from fractions import Fraction

from . import _core

__all__ = [
    "giambelli",
    "giambelli_monomials",
    "pieri",
    "multiply",
    "theta",
    "hat_theta",
    "straighten",
    "mixed_expand",
    "w_lambda",
    "stanley_Q",
    "ktableaux",
    "forest_counts",
    "modified_forest",
    "count_bases",
    "run_criterion",
    "criteria",
]


def _sum(terms):
    return {tuple(key): Fraction(c) for key, c in terms}


def _terms(d):
    return [(list(key), str(Fraction(c))) for key, c in d.items()]


def giambelli(type, n, k, lam):
    return _sum(_core.giambelli(type, n, k, list(lam)))


def giambelli_monomials(type, n, k, lam):
    return _sum(_core.giambelli_monomials(type, n, k, list(lam)))


def pieri(type, n, k, lam, p):
    return _sum(_core.pieri(type, n, k, list(lam), p))


def multiply(type, n, k, a, b, route="pieri"):
    """Product of two classes given as dicts (or single partitions)."""
    if not isinstance(a, dict):
        a = {tuple(a): 1}
    if not isinstance(b, dict):
        b = {tuple(b): 1}
    return _sum(_core.multiply(type, n, k, _terms(a), _terms(b), route))


def theta(lam, k):
    return _sum(_core.theta(list(lam), k))


def hat_theta(r, k):
    return _sum(_core.hat_theta(r, k))


def straighten(alpha, k):
    return _sum(_core.straighten(list(alpha), k))


def mixed_expand(lam, k):
    """Coefficients keyed by (mu, nu) for Q_mu(x) s_{nu'}(y)."""
    return {(tuple(mu), tuple(nu)): Fraction(c) for mu, nu, c in _core.mixed_expand(list(lam), k)}


def w_lambda(lam, k, n=0):
    return tuple(_core.w_lambda(list(lam), k, n))


def stanley_Q(w):
    return _sum(_core.stanley_Q(list(w)))


def ktableaux(w):
    return list(_core.ktableaux(list(w)))


def forest_counts(lam, p, k, modified=False):
    return dict(_core.forest_counts(list(lam), p, k, modified))


def modified_forest(lam, p, k):
    return tuple(_core.modified_forest(list(lam), p, k))


def count_bases(d, k):
    return tuple(_core.count_bases(d, k))


def run_criterion(id, max_weight=-1):
    return dict(_core.run_criterion(id, max_weight))


def criteria():
    return list(_core.criteria())
