#!/usr/bin/env python3
"""Regenerates fixtures/ with the toricbundle CLI.

usage: make_fixtures.py path/to/toricbundle [fixtures_dir]
"""

import copy
import json
import pathlib
import subprocess
import sys

KLEINSCHMIDT = [
    (1, [0]), (1, [1]), (1, [2]), (1, [3]),
    (2, [0]), (2, [1]), (2, [2]),
    (1, [0, 0]), (1, [0, 1]), (1, [1, 1]), (1, [1, 2]),
    (3, [0]), (3, [1]), (2, [0, 1]), (1, [0, 0, 1]),
]


def run(cli, *args):
    done = subprocess.run([cli, *args], check=True, capture_output=True, text=True)
    return done.stdout


def write(out, name, text):
    (out / name).write_text(text)
    return out / name


def write_json(out, name, obj):
    return write(out, name, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def kl_name(s, a):
    return f"kl_s{s}_a{'_'.join(map(str, a))}"


def main():
    cli = sys.argv[1]
    out = pathlib.Path(sys.argv[2] if len(sys.argv) > 2 else pathlib.Path(__file__).parent.parent / "fixtures")
    out.mkdir(exist_ok=True)

    for n in range(1, 6):
        fan = write(out, f"p{n}.json", run(cli, "fan", "--projective", str(n)))
        write(out, f"tangent_p{n}.json", run(cli, "tangent", "--fan", str(fan)))
    for s, a in KLEINSCHMIDT:
        name = kl_name(s, a)
        fan = write(out, f"{name}.json", run(cli, "fan", "--kleinschmidt", str(s), "--a", *map(str, a)))
        write(out, f"tangent_{name}.json", run(cli, "tangent", "--fan", str(fan)))

    write(out, "tangent_p2_sl3.json",
          run(cli, "extend", "--data", str(out / "tangent_p2.json"), "--embedding", "sl-balance"))

    # Split GL(2) data on P^2 restricting the tangent characters on each ray.
    m = {"group": {"kind": "GL", "rank": 2}, "m": [[1, 0], [1, 0], [0, 1]]}
    write_json(out, "split_p2_m.json", m)
    split = write(out, "split_p2.json", run(cli, "split-data", "--fan", str(out / "p2.json"), "--m", str(out / "split_p2_m.json")))
    write(out, "split_p2_sl3.json", run(cli, "extend", "--data", str(split), "--embedding", "sl-balance"))

    # Rank below the fan dimension on P^3 and P^4.
    write_json(out, "split_p3_m.json", {"group": {"kind": "GL", "rank": 2}, "m": [[1, 0], [0, 2], [-1, 1], [0, 0]]})
    write(out, "split_p3.json", run(cli, "split-data", "--fan", str(out / "p3.json"), "--m", str(out / "split_p3_m.json")))
    write_json(out, "split_p4_sl3_m.json",
               {"group": {"kind": "SL", "rank": 3}, "m": [[1, 0, -1], [0, 0, 0], [2, -1, -1], [0, 1, -1], [-1, 1, 0]]})
    write(out, "split_p4_sl3.json",
          run(cli, "split-data", "--fan", str(out / "p4.json"), "--m", str(out / "split_p4_sl3_m.json")))
    write(out, "tangent_p2_in_gl3_on_p2.json",
          run(cli, "extend", "--data", str(out / "tangent_p2.json"), "--embedding", "block:3:0,1"))

    tangent = json.loads((out / "tangent_p2.json").read_text())
    broken = copy.deepcopy(tangent)
    broken["P"]["1,2"][0][0] = [2, 1]
    write_json(out, "broken_cocycle.json", broken)

    # Witnesses on the tangent data of P^2.
    identity = [[[1, 1], [0, 1]], [[0, 1], [1, 1]]]
    write_json(out, "witness_identity_morphism.json",
               {"kind": "morphism", "base": 0, "g0": identity, "g": {str(c): identity for c in range(3)}})
    scaled = [[[3, 1], [0, 1]], [[0, 1], [3, 1]]]
    write_json(out, "witness_scaling_equivalence.json",
               {"kind": "equivalence", "eta": {str(c): [0, 1] for c in range(3)}, "beta": {str(c): scaled for c in range(3)}})
    write_json(out, "witness_split_reduction.json",
               {"kind": "reduction", "partition": [[0], [1]],
                "alpha": {str(c): identity for c in range(3)}, "beta": {str(c): identity for c in range(3)}})


if __name__ == "__main__":
    main()
