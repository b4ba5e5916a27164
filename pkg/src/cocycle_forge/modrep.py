"""F_p G-modules given by action matrices, with row vectors acting on the right.

``M.matrices[g]`` is the matrix of ``g``; a vector ``v`` maps to ``v @ X(g)``
and ``X(g) @ X(h) == X(gh)``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import fplin
from .pgroup import GroupTable, find_class_element

IRREDUCIBILITY_CAP = 10**6


class ModuleRep:
    def __init__(self, group: GroupTable, p: int, generator_matrices):
        self.group = group
        self.p = p
        gm = np.asarray(generator_matrices, dtype=np.int64) % p
        if gm.shape[0] != len(group.generators):
            raise ValueError("one matrix per group generator is required")
        self.generator_matrices = gm.astype(np.uint8)
        self.dim = gm.shape[1]

    @cached_property
    def matrices(self) -> np.ndarray:
        """Action matrices of every element, built along the BFS tree."""
        G, p, d = self.group, self.p, self.dim
        X = np.empty((len(G), d, d), dtype=np.uint8)
        X[0] = np.eye(d, dtype=np.uint8)
        for x in range(1, len(G)):
            X[x] = fplin.matmul_mod(X[G.parent[x]], self.generator_matrices[G.parent_gen[x]], p)
        X.setflags(write=False)
        return X

    def action(self, g: int) -> np.ndarray:
        return self.matrices[g]

    def act(self, v, g) -> np.ndarray:
        return fplin.matmul_mod(np.asarray(v), self.matrices[g], self.p)

    def check_representation(self, pairs=None) -> bool:
        """X(g) X(h) == X(gh); all pairs unless a pair list is given."""
        G, X, p = self.group, self.matrices, self.p
        if pairs is None:
            pairs = [(g, h) for g in range(len(G)) for h in range(len(G))]
        for g, h in pairs:
            if not np.array_equal(fplin.matmul_mod(X[g], X[h], p), X[G.mul(g, h)]):
                return False
        return True

    def to_json(self) -> dict:
        return {"p": self.p, "dim": self.dim, "generator_matrices": self.generator_matrices.tolist()}

    @classmethod
    def from_json(cls, obj, group: GroupTable) -> "ModuleRep":
        if isinstance(obj, str):
            obj = json.loads(obj)
        gm = np.array(obj["generator_matrices"], dtype=np.int64).reshape(-1, obj["dim"], obj["dim"])
        return cls(group, obj["p"], gm)

    def __repr__(self):
        return f"ModuleRep(p={self.p}, dim={self.dim}, group_order={len(self.group)})"


def permutation_matrix(img, p=None) -> np.ndarray:
    """Row i has its 1 in column img[i]: e_i -> e_{i.g}."""
    n = len(img)
    P = np.zeros((n, n), dtype=np.uint8)
    P[np.arange(n), img] = 1
    return P


def permutation_module(G: GroupTable, p: int) -> ModuleRep:
    return ModuleRep(G, p, [permutation_matrix(G.perms[g]) for g in G.generators])


def trivial_module(G: GroupTable, p: int, dim: int = 1) -> ModuleRep:
    eye = np.eye(dim, dtype=np.uint8)
    return ModuleRep(G, p, [eye] * len(G.generators))


@dataclass
class Decomposition:
    """P = I + V with basis maps; vectors are rows, maps multiply on the right."""

    P: ModuleRep
    I: ModuleRep
    V: ModuleRep
    embed_I: np.ndarray  # 1 x n
    embed_V: np.ndarray  # (n-1) x n, rows b_i = e_i - e_last
    project_I: np.ndarray  # n x 1
    project_V: np.ndarray  # n x (n-1)

    def restrict_to_V(self, perm_img) -> np.ndarray:
        """Matrix on V of a point permutation, in the b-basis."""
        return fplin.matmul_mod(
            fplin.matmul_mod(self.embed_V, permutation_matrix(perm_img), self.P.p), self.project_V, self.P.p
        )


def decompose_P(P: ModuleRep) -> Decomposition:
    p, n = P.p, P.dim
    if n % p == 0:
        raise ValueError(f"dim P = {n} is divisible by p = {p}; P does not split off the trivial module")
    c = pow(n, -1, p)
    q = n - 1
    embed_I = np.ones((1, n), dtype=np.uint8)
    embed_V = np.zeros((q, n), dtype=np.uint8)
    embed_V[np.arange(q), np.arange(q)] = 1
    embed_V[:, q] = p - 1
    project_I = np.full((n, 1), c, dtype=np.uint8)
    # v -> first q coordinates of v - (sum v / n) * ones
    project_V = np.zeros((n, q), dtype=np.int64)
    project_V[np.arange(q), np.arange(q)] = 1
    project_V = ((project_V - c) % p).astype(np.uint8)
    V = ModuleRep(
        P.group,
        p,
        [fplin.matmul_mod(fplin.matmul_mod(embed_V, X, p), project_V, p) for X in P.generator_matrices],
    )
    I = trivial_module(P.group, p)
    return Decomposition(P, I, V, embed_I, embed_V, project_I, project_V)


def fixed_points(M: ModuleRep) -> np.ndarray:
    """Basis (rows) of the vectors fixed by every generator."""
    eye = np.eye(M.dim, dtype=np.int64)
    blocks = [(X.astype(np.int64) - eye).T for X in M.generator_matrices]
    return fplin.kernel_basis(np.vstack(blocks) % M.p, M.p)


def spin_basis(M: ModuleRep, v) -> np.ndarray:
    """RREF basis of the smallest submodule containing v."""
    W = fplin.row_space_rref(np.atleast_2d(np.asarray(v, dtype=np.int64) % M.p), M.p)
    while True:
        if len(W) == 0:
            return W
        images = [fplin.matmul_mod(W, X, M.p) for X in M.generator_matrices]
        W2 = fplin.row_space_rref(np.vstack([W] + images), M.p)
        if len(W2) == len(W):
            return W2
        W = W2


def spin(M: ModuleRep, v) -> int:
    return len(spin_basis(M, v))


def _projective_vectors(dim, p):
    # one representative (leading coordinate 1) per line
    for lead in range(dim):
        tail = dim - lead - 1
        for k in range(p**tail):
            v = np.zeros(dim, dtype=np.int64)
            v[lead] = 1
            for j in range(tail):
                k, r = divmod(k, p)
                v[lead + 1 + j] = r
            yield v


def is_irreducible(M: ModuleRep, *, cap=IRREDUCIBILITY_CAP, samples=2000, seed=0, certificate=False):
    """Every nonzero vector spins to the whole space.

    Exhaustive (one vector per line suffices, scalars spin identically) when
    p**dim <= cap; otherwise random vectors are tried and the certificate is
    "sampled", which can only prove reducibility.
    """
    if M.p**M.dim <= cap:
        mode = "exhaustive"
        vectors = _projective_vectors(M.dim, M.p)
    else:
        mode = "sampled"
        rng = random.Random(seed)
        vectors = (np.array([rng.randrange(M.p) for _ in range(M.dim)]) for _ in range(samples))
    result = True
    for v in vectors:
        if v.any() and spin(M, v) < M.dim:
            result = False
            mode = "witness"
            break
    return (result, mode) if certificate else result


def p_prime_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def fixed_point_counts(L: GroupTable) -> np.ndarray:
    return (L.perms == np.arange(L.degree)).sum(axis=1)


def brauer_char_check(V: ModuleRep, L: GroupTable) -> list[dict]:
    """Compare fix(g) - 1 on the projective line with the principal-block character chi.

    Probes the identity, an involution, an element y of order (q+1)/d and an
    element x of order (q-1)_{p'}/d.  Each probe also checks that the trace of
    g on V agrees with fix(g) - 1 modulo p.
    """
    q, p = L.degree - 1, V.p
    d = 2 if q % 2 else 1
    fix = fixed_point_counts(L)
    x_order = p_prime_part(q - 1, p) // d
    probes = [("1a", 1, q, "")]
    if q % 2 == 0:
        probes.append(("2a", 2, 0, ""))
    elif x_order % 2 == 0:
        # q = 1 mod 4: involutions are powers of x and take the x-column value
        probes.append(("2a", 2, 1, "involution lies in the (x^r) family for q = 1 mod 4"))
    else:
        probes.append(("2a", 2, -1, ""))
    if x_order > 1:
        probes.append(("x", x_order, 1, ""))
    else:
        probes.append(
            ("x", (q - 1) // d, 1, "(q-1)_{p'}/d = 1: probing a split torus generator (p-singular) instead")
        )
    probes.append(("y", (q + 1) // d, -1, ""))
    report = []
    for label, order, expected, note in probes:
        g = 0 if order == 1 else find_class_element(L, order)
        value = int(fix[g]) - 1
        trace = int(np.trace(V.matrices[g].astype(np.int64))) % p
        report.append(
            {
                "class": label,
                "order": order,
                "element": g,
                "fixed_points": int(fix[g]),
                "value": value,
                "expected": expected,
                "trace_mod_p": trace,
                "pass": value == expected and trace == value % p,
                "note": note,
            }
        )
    return report
