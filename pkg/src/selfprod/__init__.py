"""Integers of the form k*f(k) for f in {tau, omega, Omega, phi}.

The package is split into four layers:

* :mod:`selfprod.sieve` - prime tables, segmented arithmetic-function sieves, factorization
* :mod:`selfprod.core` - enumeration, counting, collisions and phi-inversion
* :mod:`selfprod.constants` - Gamma, zeta, Q and the Euler-product constants
* :mod:`selfprod.harness` / :mod:`selfprod.cli` - experiments and the ``selfprod`` command
"""

from .constants import (
    EulerProductValue,
    FIdentityReport,
    QValue,
    c0_constant,
    c1_c2_constants,
    f_identity_check,
    g_function,
    gamma,
    lambda_fn,
    lambda_star_fn,
    q_function,
    zeta,
)
from .core import (
    CollisionRecord,
    FKind,
    KSetStats,
    RepresentableSet,
    count_representable,
    enumerate_representable,
    find_collisions,
    invert_phi_many,
    invert_phi_selfproduct,
    k_set_stats,
)
from .errors import DomainError, PreconditionError, ResourceCapError, SelfProdError
from .sieve import ArithTable, Factorization, PrimeTable, TableKind, factorize, sieve_primes, sieve_table

__version__ = "0.1.0"

__all__ = [
    "ArithTable",
    "CollisionRecord",
    "DomainError",
    "EulerProductValue",
    "FIdentityReport",
    "FKind",
    "Factorization",
    "KSetStats",
    "PreconditionError",
    "PrimeTable",
    "QValue",
    "RepresentableSet",
    "ResourceCapError",
    "SelfProdError",
    "TableKind",
    "c0_constant",
    "c1_c2_constants",
    "count_representable",
    "enumerate_representable",
    "f_identity_check",
    "factorize",
    "find_collisions",
    "g_function",
    "gamma",
    "invert_phi_many",
    "invert_phi_selfproduct",
    "k_set_stats",
    "lambda_fn",
    "lambda_star_fn",
    "q_function",
    "sieve_primes",
    "sieve_table",
    "zeta",
]
