#!/usr/bin/env python3
"""Regenerate the golden fixtures under tests/fixtures/.

Elliptic eigenforms come from exact q-expansions: the weight-12 cusp form
delta = q prod (1-q^n)^24 (expanded through the pentagonal-number series)
multiplied by the Eisenstein series E6 = 1 - 504 sum sigma5(n) q^n and
E10 = 1 - 264 sum sigma9(n) q^n.  S_18 and S_22 are one-dimensional, so
the products are the normalized eigenforms.  The Siegel records derive
from them by the lift eigenvalue identities; every fixture is labeled
DERIVED with its oracle in MANIFEST.json.

Usage: python tools/gen_fixtures.py
"""

from __future__ import annotations

import cmath
import json
import math
from pathlib import Path

N_COEFFS = 120
SIEGEL_PRIME_BOUND = 50

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


# ---------------------------------------------------------------------------
# q-expansion oracle (exact integer arithmetic)


def eta_power_24(n_terms: int) -> list[int]:
    """Coefficients of q^(-1) * delta = prod (1-q^n)^24, indices 0..n_terms."""
    # pentagonal number theorem for prod (1-q^n)
    euler = [0] * (n_terms + 1)
    euler[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n_terms and g2 > n_terms:
            break
        sign = -1 if k % 2 else 1
        if g1 <= n_terms:
            euler[g1] += sign
        if g2 <= n_terms:
            euler[g2] += sign
        k += 1
    out = [1] + [0] * n_terms
    for _ in range(24):
        nxt = [0] * (n_terms + 1)
        for i, a in enumerate(out):
            if a == 0:
                continue
            for j, b in enumerate(euler):
                if i + j > n_terms:
                    break
                if b:
                    nxt[i + j] += a * b
        out = nxt
    return out


def sigma(n: int, power: int) -> int:
    return sum(d**power for d in range(1, n + 1) if n % d == 0)


def eisenstein(weight: int, factor: int, n_terms: int) -> list[int]:
    """1 + factor * sum sigma_(weight-1)(n) q^n, indices 0..n_terms."""
    return [1] + [factor * sigma(n, weight - 1) for n in range(1, n_terms + 1)]


def multiply(a: list[int], b: list[int], n_terms: int) -> list[int]:
    out = [0] * (n_terms + 1)
    for i, x in enumerate(a):
        if x == 0 or i > n_terms:
            continue
        for j, y in enumerate(b):
            if i + j > n_terms:
                break
            if y:
                out[i + j] += x * y
    return out


def delta_times(eis: list[int], n_terms: int) -> list[int]:
    """Coefficients a(1..n_terms) of delta * E, a cusp form."""
    eta24 = eta_power_24(n_terms - 1)
    prod = multiply(eta24, eis, n_terms - 1)
    return prod[: n_terms]  # a(n) = prod[n-1] since delta starts at q^1


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % f for f in range(2, p))]


# ---------------------------------------------------------------------------
# fixture writers


def write(path: Path, doc: dict):
    path.write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {path}")


def elliptic_record(label: str, weight: int, coeffs: list[int]) -> dict:
    return {
        "label": label,
        "weight": weight,
        "coefficients": [str(c) for c in coeffs],
    }


def sk_siegel_record(label: str, k: int, coeffs: list[int]) -> dict:
    """Exact lift record: lambda(p) = p^(k-1) + p^(k-2) + a_f(p) and
    lambda(p^2) = p^(2k-2) + a_f(p)(p^(k-1) + p^(k-2)) + a_f(p)^2."""
    prime_data = []
    for p in primes_upto(SIEGEL_PRIME_BOUND):
        af = coeffs[p - 1]
        l1 = p ** (k - 1) + p ** (k - 2) + af
        l2 = p ** (2 * k - 2) + af * (p ** (k - 1) + p ** (k - 2)) + af * af
        prime_data.append({"p": p, "lambda_p": str(l1), "lambda_p2": str(l2)})
    return {
        "label": label,
        "weight": k,
        "level": 1,
        "type_tag": "P",
        "prime_data": prime_data,
    }


def synthetic_zero_lambda_record(label: str, k: int) -> dict:
    """lambda(p) = 0 and lambda(p^2) = 2 p^(2k-3) - p^(2k-4): the exact
    eigenvalue image of the normalized parameters alpha=1, beta=-1."""
    prime_data = []
    for p in primes_upto(13):
        l2 = 2 * p ** (2 * k - 3) - p ** (2 * k - 4)
        prime_data.append({"p": p, "lambda_p": "0", "lambda_p2": str(l2)})
    return {
        "label": label,
        "weight": k,
        "level": 1,
        "type_tag": "unknown",
        "prime_data": prime_data,
    }


def unitary_satake_record(label: str, k: int, seed_angles) -> dict:
    prime_data = []
    for p, (theta, phi) in seed_angles.items():
        alpha = cmath.exp(1j * theta)
        beta = cmath.exp(1j * phi)
        prime_data.append(
            {
                "p": p,
                "alpha": [alpha.real, alpha.imag],
                "beta": [beta.real, beta.imag],
            }
        )
    return {
        "label": label,
        "weight": k,
        "level": 1,
        "type_tag": "G",
        "prime_data": prime_data,
    }


def cancellation_record(label: str, k: int) -> dict:
    """Unitary parameters tuned so lambda(2^4) sits on a catastrophic
    cancellation (the exact value is ~0 while intermediates are ~2^(4k-6)):
    with s = A+B = 0 and u = AB = -A^2, the normalized quartic eigenvalue
    u^2 + 4u + 3 + (u+2)/2 vanishes at A^2 = (9 - sqrt(17))/4.  Any two
    float evaluation orders then disagree far beyond 1e-9 relative, which
    is what the record is for: exercising the eigs disagreement exit."""
    A = math.sqrt((9 - math.sqrt(17)) / 4)
    theta = math.acos(A / 2)
    phi = math.acos(-A / 2)
    alpha = cmath.exp(1j * theta)
    beta = cmath.exp(1j * phi)
    return {
        "label": label,
        "weight": k,
        "level": 1,
        "type_tag": "unknown",
        "prime_data": [
            {
                "p": 2,
                "alpha": [alpha.real, alpha.imag],
                "beta": [beta.real, beta.imag],
            }
        ],
    }


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    manifest = []

    e6 = eisenstein(6, -504, N_COEFFS)
    w18 = delta_times(e6, N_COEFFS)
    assert w18[0] == 1 and w18[1] == -528, w18[:2]
    write(OUT_DIR / "elliptic_w18.json", elliptic_record("18.1.a", 18, w18))
    manifest.append(
        {
            "file": "elliptic_w18.json",
            "provenance": "DERIVED",
            "oracle": "q-expansion product delta * E6 (pentagonal-number series)",
        }
    )

    e10 = eisenstein(10, -264, N_COEFFS)
    w22 = delta_times(e10, N_COEFFS)
    assert w22[0] == 1 and w22[1] == -288, w22[:2]
    write(OUT_DIR / "elliptic_w22.json", elliptic_record("22.1.a", 22, w22))
    manifest.append(
        {
            "file": "elliptic_w22.json",
            "provenance": "DERIVED",
            "oracle": "q-expansion product delta * E10 (pentagonal-number series)",
        }
    )

    write(OUT_DIR / "siegel_sk_k10.json", sk_siegel_record("SK(18.1.a)", 10, w18))
    manifest.append(
        {
            "file": "siegel_sk_k10.json",
            "provenance": "DERIVED",
            "oracle": "lift eigenvalue identities applied to elliptic_w18",
        }
    )

    write(OUT_DIR / "siegel_sk_k12.json", sk_siegel_record("SK(22.1.a)", 12, w22))
    manifest.append(
        {
            "file": "siegel_sk_k12.json",
            "provenance": "DERIVED",
            "oracle": "lift eigenvalue identities applied to elliptic_w22",
        }
    )

    for k in (4, 6):
        name = f"siegel_zero_k{k}.json"
        write(OUT_DIR / name, synthetic_zero_lambda_record(f"zero-lambda-k{k}", k))
        manifest.append(
            {
                "file": name,
                "provenance": "DERIVED",
                "oracle": "alpha=1, beta=-1 parameter point, exact eigenvalue map",
            }
        )

    angles = {
        2: (0.61, 1.97),
        3: (1.13, 2.55),
        5: (0.37, 2.91),
        7: (1.71, 0.89),
        11: (2.23, 1.31),
        13: (0.97, 2.03),
    }
    write(
        OUT_DIR / "siegel_unitary_k20.json",
        unitary_satake_record("unitary-demo-k20", 20, angles),
    )
    manifest.append(
        {
            "file": "siegel_unitary_k20.json",
            "provenance": "DERIVED",
            "oracle": "unitary parameters exp(i*theta) at fixed angles",
        }
    )

    write(
        OUT_DIR / "siegel_cancellation_k10.json",
        cancellation_record("cancellation-demo-k10", 10),
    )
    manifest.append(
        {
            "file": "siegel_cancellation_k10.json",
            "provenance": "DERIVED",
            "oracle": "root of the normalized quartic eigenvalue at p=2",
        }
    )

    write(OUT_DIR / "MANIFEST.json", {"fixtures": manifest})


if __name__ == "__main__":
    main()
