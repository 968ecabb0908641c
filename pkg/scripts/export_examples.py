"""Write the showcase artifacts (JSON, DOT, text) into a directory.

    python scripts/export_examples.py --out-dir exports

Produces, for the hexagon fan and the heptagon zigzag:
  *_accordion.json / *_silting.json   complexes with g-vectors and duals
  *_exchange.dot                      facet adjacency graph for graphviz
  *_verify.json                       the isomorphism report
plus quiver.json files ready to feed back through `accordion-tau silting
--quiver`.
"""

import argparse
import json
import pathlib

from accordion_tau.accordion import accordion_complex
from accordion_tau.complexes import complex_text, dual_graph, exchange_graph_dot
from accordion_tau.geometry import validate_dissection
from accordion_tau.quiver import quiver_of_dissection
from accordion_tau.rigidity import silting_complex
from accordion_tau.verify import verify_main

SHOWCASES = {
    "hexagon_fan": (6, [(0, 2), (0, 3), (0, 4)]),
    "heptagon_zigzag": (7, [(0, 2), (2, 4), (4, 6)]),
    "hexagon_triangle": (6, [(0, 2), (2, 4), (0, 4)]),
}


def dump(path: pathlib.Path, obj) -> None:
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    print(f"wrote {path}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="exports")
    args = parser.parse_args()
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    for name, (m, pairs) in SHOWCASES.items():
        d = validate_dissection(m, pairs)
        q = quiver_of_dissection(d)
        acc = accordion_complex(d)
        silt = silting_complex(q)

        dump(out / f"{name}_dissection.json", d.to_json())
        dump(out / f"{name}_quiver.json", q.to_json())
        dump(
            out / f"{name}_accordion.json",
            {"complex": acc.to_json(), "dual_graph": dual_graph(acc).to_json()},
        )
        dump(
            out / f"{name}_silting.json",
            {"complex": silt.to_json(), "dual_graph": dual_graph(silt).to_json()},
        )
        dump(out / f"{name}_verify.json", verify_main(d).to_json())

        dot = exchange_graph_dot(dual_graph(acc), acc, name=name)
        (out / f"{name}_exchange.dot").write_text(dot)
        print(f"wrote {out / f'{name}_exchange.dot'}")
        (out / f"{name}_complex.txt").write_text(complex_text(acc))
        print(f"wrote {out / f'{name}_complex.txt'}")


if __name__ == "__main__":
    main()
