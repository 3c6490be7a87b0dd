"""Hand-edited and tampered certificate variants, written in the canonical
layout (sorted keys, two-space indent, trailing newline)."""
import copy
import json
import pathlib
import sys

src, dst = pathlib.Path(sys.argv[1]), pathlib.Path(sys.argv[2])


def load(name):
    return json.loads((src / name).read_text())


def save(doc, path):
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


# Hand-derived anchor: l = 7, M = 6, residues {1, 5} (subset of the good set).
t7 = load("torus_l7_search.json")
p = t7["payload"]
keep = [i for i, n in enumerate(p["residues"]) if n in (1, 5)]
p["residues"] = [p["residues"][i] for i in keep]
p["fibers"] = [p["fibers"][i] for i in keep]
assert p["l"] == 7 and p["M"] == 6 and p["residues"] == [1, 5]
save(t7, src / "torus_anchor.json")

# Low bit of residue 5 flipped: 2^4 + 3^4 + 1 = 98 = 0 mod 7.
bad = copy.deepcopy(t7)
bad["payload"]["residues"] = [1, 4]
save(bad, dst / "torus_flipped_residue.json")

bad = copy.deepcopy(t7)
bad["payload"]["M"] = 5
save(bad, dst / "torus_wrong_modulus.json")

bad = copy.deepcopy(t7)
bad["payload"]["fibers"][0][0]["coeffs"][0] = 2
save(bad, dst / "torus_wrong_fiber.json")

bad = copy.deepcopy(t7)
bad["payload"]["l"] = 3
save(bad, dst / "torus_bad_prime.json")

r = load("rec_gaussian.json")
bad = copy.deepcopy(r)
bad["payload"]["values"][0] = (bad["payload"]["values"][0] + 1) % bad["payload"]["l"]
save(bad, dst / "rec_wrong_value.json")

bad = copy.deepcopy(r)
bad["payload"]["spec"]["shift"] = 2
save(bad, dst / "rec_swapped_spec.json")

r2 = load("rec_pow2.json")
bad = copy.deepcopy(r2)
bad["payload"]["residues"] = [0] + bad["payload"]["residues"]
bad["payload"]["values"] = [1] + bad["payload"]["values"]
save(bad, dst / "rec_square_residue.json")

e = load("ell_anchor.json")
bad = copy.deepcopy(e)
bad["payload"]["residues"] = [0]
save(bad, dst / "ell_zero_residue.json")

bad = copy.deepcopy(e)
bad["payload"]["point"]["x"] = "4"
save(bad, dst / "ell_moved_point.json")

k = load("kron_report.json")
bad = copy.deepcopy(k)
bad["payload"]["verdicts"][1]["m"] = bad["payload"]["verdicts"][0]["m"]
save(bad, dst / "kron_duplicate_m.json")

bad = copy.deepcopy(k)
bad["payload"]["subgroups"]["flagged"][0]["theta"] = [1, 1]
save(bad, dst / "kron_wrong_theta.json")

pb = load("pb_y2_x1.json")
bad = copy.deepcopy(pb)
ev = bad["payload"]["verdict"]["evidence"]
ev["factor"] = "x1 - 2*y"  # x1 + y would still divide y^2 - x1^2
save(bad, dst / "pb_wrong_factor.json")

pb = load("pb_y2_x1_1.json")
bad = copy.deepcopy(pb)
bad["payload"]["cover"] = "y^2 - x1"
save(bad, dst / "pb_other_cover.json")
