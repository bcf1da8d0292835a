"""Regenerate the bundled Hecke tables with PARI/GP (through cypari2).

Not a package dependency: run once, commit the output.

    pip install cypari2
    python tools/gen_hecke_tables.py src/gsp4sieve/data/hecke
"""
import argparse
import datetime
from pathlib import Path

import cypari2

# level -> primes p (all coprime to the level)
LEVELS = {
    1: [3, 5, 7, 11, 13],
    11: [2, 3, 5, 7],
    # curve A, c | 2^12 * 5 * 23
    368: [3, 7, 11, 13, 17, 19],
    460: [3, 7, 11, 13, 17, 19],
    512: [3, 7, 11, 13, 17, 19],
    640: [3, 7, 11, 13, 17, 19],
    # curve A2, c | 2^8 * 19 * 151
    256: [3, 5, 17],
    604: [3, 5, 17],
    608: [3, 5, 17],
    # curve A3, c | 2^20
    1024: [3, 5, 7, 11, 13],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    pari = cypari2.Pari()
    pari.allocatemem(2 * 10**9, silent=True)
    version = ".".join(str(v) for v in pari.version()[:3])
    for level, primes in LEVELS.items():
        mf = pari(f"mfinit([{level}, 2], 1)")
        dim = int(pari.mfdim(mf))
        lines = [
            f"# S_2(Gamma_0({level})), full cuspidal space (oldforms included)",
            f"# produced by PARI/GP {version}: charpoly(mfheckemat(mfinit([{level},2],1), p))",
            f"# generated {datetime.date.today().isoformat()} by tools/gen_hecke_tables.py",
            f"dim {level} {dim}",
        ]
        if dim:
            for p in primes:
                cp = pari.charpoly(pari.mfheckemat(mf, p))
                coeffs = [int(c) for c in reversed(pari.Vecrev(cp))]
                lines.append(f"T {level} {p} : " + ",".join(map(str, coeffs)))
        (out / f"level_{level:04d}.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(level, dim)


if __name__ == "__main__":
    main()
