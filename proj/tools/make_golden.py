#!/usr/bin/env python3
"""Regenerate data/golden/*.json.

The sl(5,R) rows and the su(p,q) table are transcribed by hand; the genus
bound grid is the closed-form evaluation for 1 <= q <= p <= 6.
"""
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
OUT = ROOT / "data" / "golden"


def sl5_table():
    rows = [
        ("[5]", [5], True, ["4", "2", "0", "-2", "-4"], False),
        ("[4,1]", [4, 1], False, ["3", "1", "0", "-1", "-3"], True),
        ("[3,2]", [3, 2], False, ["2", "1", "0", "-1", "-2"], False),
        ("[3,1^2]", [3, 1, 1], True, ["2", "0", "0", "0", "-2"], False),
        ("[2^2,1]", [2, 2, 1], False, ["1", "1", "0", "-1", "-1"], True),
        ("[2,1^3]", [2, 1, 1, 1], False, ["1", "0", "0", "0", "-1"], False),
    ]
    return {
        "algebra": "sl(5,R)",
        "a_h": [["2", "-2", "0", "0", "0"], ["4", "2", "0", "-2", "-4"]],
        "rows": [
            {"symbol": s, "partition": p, "even": e, "dominant": v, "proper": pr}
            for s, p, e, v, pr in rows
        ],
        "even_proper_exists": False,
    }


def supq_table():
    grid = []
    for p in range(1, 7):
        for q in range(1, p + 1):
            grid.append({
                "p": p,
                "q": q,
                "rho1_even": p == q,
                "rho2_even": None if p == q else True,
                "rho1_genus_bound": 2 * q * q + (p - q) ** 2 - 1,
                "rho2_genus_bound": None if p == q else (p - q) ** 2 + 2 * q - 1,
            })
    return {
        "table": [
            {"case": "p>q", "rho1": "non-even", "rho2": "even"},
            {"case": "p=q", "rho1": "even", "rho2": "undefined"},
        ],
        "sigma": {"rho1": "diag(-I_q, I_{p-q}, -I_q)", "rho2": "I_{p+q}"},
        "genus_bound": {"rho1": "2q^2+(p-q)^2-1", "rho2": "(p-q)^2+2q-1"},
        "grid": grid,
    }


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "sl5_partition_table.json").write_text(json.dumps(sl5_table(), indent=2) + "\n")
    (OUT / "su_pq_table.json").write_text(json.dumps(supq_table(), indent=2) + "\n")


if __name__ == "__main__":
    main()
