#!/usr/bin/env python3
"""Export the AR quiver of a quiver/tiling file (or a named sample) as DOT.

    python3 scripts/export_ar_quiver.py fix_b ar.dot
    python3 scripts/export_ar_quiver.py path/to/file.quiver ar.dot
"""

import sys
from pathlib import Path

from tilealg import samples
from tilealg.artheory import ar_quiver_dot, build_ar_quiver
from tilealg.cli import _load_any


def main(argv):
    if len(argv) != 3:
        print(__doc__)
        return 2
    source, dest = argv[1], argv[2]
    named = samples.algebra_fixtures()
    if source in named:
        pres = named[source]
    else:
        pres, _, _ = _load_any(source)
    ar = build_ar_quiver(pres)
    Path(dest).write_text(ar_quiver_dot(ar), encoding="utf-8")
    print(f"{len(ar.nodes)} nodes, {len(ar.edges)} edges, "
          f"{len(ar.tau_pairs)} tau pairs -> {dest}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
