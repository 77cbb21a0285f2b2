"""Cross-checks of formulas, oracle, bijections and published tables.

Each function returns a list of ``Check`` records; nothing here raises on a
mismatch, so a caller sees every failing cell at once.
"""
from __future__ import annotations

from .reference import S6_CYCLE_TABLE, S6_SUMS, TABLES
from .bijections import (
    big_gamma,
    big_gamma_inv,
    delta,
    delta_inv,
    krattenthaler,
    krattenthaler_inv,
    mdp_to_partial,
    partial_to_mdp,
    zeta,
    zeta_inv,
)
from .dyck import count_paths, enumerate_mdp, enumerate_paths, is_symmetric, peaks
from .enumerate import count, cycle_class_counts, involutions, permutations_avoiding
from .formulas import Check, i_stat, identity_checks, series_checks
from .perm_core import S3, CycleType, fixed_points, occurrences
from .syt import gamma_move, involution_of, tableau_of

SECTIONS = ("reference", "oracle", "bijections", "structure", "identities", "series", "cycles")


def _restricted(n: int, k: int, pattern: str):
    return [p for p in involutions(n, k) if occurrences(p, pattern) == 0]


def reference_checks(n_max: int = 8) -> list[Check]:
    """Published tables against both the formulas and the brute-force oracle."""
    out = []
    n_max = min(n_max, 8)
    for (stat, patterns), rows in TABLES.items():
        for source in ("formula", "oracle"):
            c = Check(f"reference table {stat} {'='.join(patterns)} ({source})")
            for pattern in patterns:
                for n in range(n_max + 1):
                    for k in range(n + 1):
                        got = i_stat(stat, n, k, pattern) if source == "formula" else count(stat, n, k, pattern)
                        c.expect((pattern, n, k), got, rows[n][k])
            out.append(c)
    return out


def oracle_checks(n_max: int = 10) -> list[Check]:
    out = []
    for stat in ("avoid", "once"):
        c = Check(f"formula = oracle, {stat}, n <= {n_max}")
        for a in S3:
            for n in range(n_max + 1):
                for k in range(n + 1):
                    c.expect((str(a), n, k), i_stat(stat, n, k, a), count(stat, n, k, a))
        out.append(c)
    return out


def _bijection_check(name, domain, codomain, forward, backward) -> Check:
    """Forward and backward round trips plus image = codomain, over whole finite sets."""
    c = Check(name)
    domain = list(domain)
    codomain = list(codomain)
    images = []
    for x in domain:
        y = forward(x)
        images.append(y)
        c.expect(("fwd-roundtrip", str(x)), backward(y), x)
    for y in codomain:
        c.expect(("bwd-roundtrip", str(y)), forward(backward(y)), y)
    c.expect("image = codomain", sorted(set(images)), sorted(codomain))
    c.expect("injective", len(set(images)), len(domain))
    return c


def bijection_checks(n_max: int = 10, k_max_n: int = 7, mdp_max: int = 12) -> list[Check]:
    """delta and zeta for n <= n_max; K for n <= k_max_n; gamma and Gamma for even n <= n_max;
    the modified-Dyck-path map for n <= mdp_max."""
    out = []
    for name, pattern, fwd, bwd in (("delta", "321", delta, delta_inv), ("zeta", "213", zeta, zeta_inv)):
        c = Check(f"{name} / {name}^-1 on I_n^k({pattern}) <-> D(n,k), n <= {n_max}")
        for n in range(n_max + 1):
            for k in range(n % 2, n + 1, 2):
                sub = _bijection_check("", _restricted(n, k, pattern), enumerate_paths(n, k), fwd, bwd)
                c.checked += sub.checked
                c.failures += [((n, k),) + f for f in sub.failures]
        out.append(c)

    c = Check(f"K / K^-1 on S_n(123) <-> D(2n,0), n <= {k_max_n}")
    for n in range(k_max_n + 1):
        sub = _bijection_check("", permutations_avoiding(n, ["123"]), enumerate_paths(2 * n, 0),
                               krattenthaler, krattenthaler_inv)
        c.checked += sub.checked
        c.failures += [(n,) + f for f in sub.failures]
    out.append(c)

    c = Check(f"tableau move: I_n^0(123) <-> I_n^2(123), even n <= {n_max}")
    g = Check(f"Gamma path flip: I_n^0(123) <-> I_n^2(123), even n <= {n_max}")
    for n in range(2, n_max + 1, 2):
        zero = _restricted(n, 0, "123")
        two = _restricted(n, 2, "123")
        sub = _bijection_check(
            "", [tableau_of(p) for p in zero], [tableau_of(p) for p in two], gamma_move, gamma_move
        )
        c.checked += sub.checked
        c.failures += [(n,) + tuple(map(str, f)) for f in sub.failures]
        c.expect((n, "image involutions avoid 123 with 2 fixed points"),
                 sorted(involution_of(gamma_move(tableau_of(p))) for p in zero), sorted(two))
        sub = _bijection_check(
            "", [krattenthaler(p) for p in zero], [krattenthaler(p) for p in two], big_gamma, big_gamma_inv
        )
        g.checked += sub.checked
        g.failures += [(n,) + f for f in sub.failures]
    out += [c, g]

    c = Check(f"MDP(n;k) <-> D(n,k+2), n <= {mdp_max}")
    for n in range(mdp_max + 1):
        for k in range(n % 2, n + 1, 2):
            sub = _bijection_check("", enumerate_mdp(n, k), enumerate_paths(n, k + 2), mdp_to_partial, partial_to_mdp)
            c.checked += sub.checked
            c.failures += [((n, k),) + f for f in sub.failures]
            c.expect((n, k, "count"), sum(1 for _ in enumerate_mdp(n, k)), count_paths(n, k + 2))
    out.append(c)
    return out


def structure_checks(k_max_n: int = 9, inv_max: int = 10) -> list[Check]:
    """Shape of K on involutions, and pattern avoidance of the inverse-bijection images."""
    sym = Check(f"K(pi) symmetric with peak parity = fixed-point parity, involutions n <= {k_max_n}")
    for n in range(k_max_n + 1):
        for p in involutions(n):
            if occurrences(p, "123"):
                continue
            d = krattenthaler(p)
            k = len(fixed_points(p))
            sym.expect((str(p), "symmetric"), is_symmetric(d), True)
            if k in (0, 2) and n > 0:
                sym.expect((str(p), "peak parity"), peaks(d) % 2, k // 2)
    avoid = Check(f"delta^-1 images avoid 321, zeta^-1 images avoid 213, n <= {inv_max}")
    for n in range(inv_max + 1):
        for k in range(n % 2, n + 1, 2):
            for d in enumerate_paths(n, k):
                avoid.expect((str(d), "321"), occurrences(delta_inv(d), "321"), 0)
                avoid.expect((str(d), "213"), occurrences(zeta_inv(d), "213"), 0)
    return [sym, avoid]


def cycle_table_check() -> list[Check]:
    c = Check("S6 cycle table")
    by132 = cycle_class_counts(6, "132")
    by321 = cycle_class_counts(6, "321")
    for parts, expected in S6_CYCLE_TABLE.items():
        ct = CycleType(parts)
        c.expect(str(ct), (by132[ct], by321[ct]), expected)
    c.expect("Sum", (sum(by132.values()), sum(by321.values())), S6_SUMS)
    return [c]


def run(sections=SECTIONS, n_max: int = 8) -> list[Check]:
    """Run the named sections, each capped at ``n_max``."""
    out: list[Check] = []
    for section in sections:
        if section == "reference":
            out += reference_checks(n_max)
        elif section == "oracle":
            out += oracle_checks(n_max)
        elif section == "bijections":
            out += bijection_checks(n_max, min(n_max, 7), n_max)
        elif section == "structure":
            out += structure_checks(n_max, n_max)
        elif section == "identities":
            out += identity_checks(n_max)
        elif section == "series":
            out += series_checks(n_max, min(n_max, 8))
        elif section == "cycles":
            if n_max >= 6:
                out += cycle_table_check()
        else:
            raise ValueError(f"unknown section {section!r}; choose from {', '.join(SECTIONS)}")
    return out
