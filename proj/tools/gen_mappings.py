#!/usr/bin/env python3
# Copyright 2026 The seclint Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates data/mappings.txt, the synthetic coverage fixture.

Only the per-kind totals are meaningful. Which rule lands in which kind is
drawn from a fixed seed.
"""

import random
import sys

CORE_EXPLICIT = ["R1.3", "R8.4", "R9.1", "R10.3", "R11.3", "R12.2", "R13.2",
                 "R17.2", "R18.1", "R18.6", "R20.7", "R21.1", "R22.2", "D4.1"]
CORE_IMPLICIT = ["R1.3", "D4.11", "R18.1", "R10.1", "D4.14"]
CORE_RESTRICT = ["BAN.21_3", "BAN.21_5", "BAN.21_6", "BAN.21_8", "R21.4",
                 "R21.7", "R21.9", "R21.10", "R19.2", "R18.7"]
AMEND = ["SEC.extdata.1", "SEC.sizeof.1", "SEC.ctype.1", "SEC.mem.1", "SEC.mem.2",
         "SEC.mem.3", "SEC.env.1", "SEC.env.2", "SEC.string.1", "SEC.string.2",
         "SEC.eof.1", "SEC.errno.1", "SEC.errno.2", "SEC.errno.3", "R21.13",
         "R21.14", "R21.17", "R21.18", "R22.7", "R22.8", "R22.9", "R22.10",
         "R12.5"]
CORE_IMPLICIT = [g for g in CORE_IMPLICIT if g != "D4.14"]


def cite(rng, pool, k=None):
    k = k or rng.randint(1, 2)
    return ",".join(sorted(rng.sample(pool, k)))


def row(ruleset, rule, profile, kind, ids):
    return f"{ruleset} | {rule} | {profile} | {kind} | {ids or '-'}"


def ts17961(rng):
    rules = [f"TS.{i:02d}" for i in range(1, 47)]
    # (mc3 kind, mc3a1 kind, count)
    plan = ([("explicit", "explicit")] * 22 + [("implicit", "explicit")] * 4 +
            [("implicit", "implicit")] * 3 + [("restrictive", "explicit")] * 3 +
            [("restrictive", "restrictive")] * 8 + [("broad", "explicit")] * 2 +
            [("none", "explicit")] * 4)
    rng.shuffle(plan)
    lines = []
    for rule, (before, after) in zip(rules, plan):
        pools = {"explicit": CORE_EXPLICIT, "implicit": CORE_IMPLICIT,
                 "restrictive": CORE_RESTRICT}
        ids = cite(rng, pools[before]) if before in pools else ""
        lines.append(row("ts17961", rule, "mc3", before, ids))
        if after == before:
            ids_after = ids
        else:
            ids_after = cite(rng, AMEND, 1) + ("," + ids if ids else "")
            ids_after = ",".join(sorted(set(ids_after.split(","))))
        lines.append(row("ts17961", rule, "mc3a1", after, ids_after))
    return lines


def cert(rng):
    kinds14 = (["c11"] * 13 + ["explicit"] * 41 + ["implicit"] * 17 +
               ["restrictive"] * 21 + ["none"] * 5)
    rng.shuffle(kinds14)
    # CERT.050 is the withdrawn rule and must be restrictive in 2014.
    ids14 = [f"CERT.{i:03d}" for i in range(1, 99) if i != 50]
    pools = {"explicit": CORE_EXPLICIT + AMEND, "implicit": CORE_IMPLICIT,
             "restrictive": CORE_RESTRICT}
    assigned = {}
    for rule, kind in zip(ids14, kinds14):
        assigned[rule] = (kind, cite(rng, pools[kind]) if kind in pools else "")
    assigned["CERT.050"] = ("restrictive", "BAN.21_6")
    lines = []
    for rule in sorted(assigned):
        kind, ids = assigned[rule]
        lines.append(row("certc2014", rule, "mc3a1", kind, ids))
    added = {"CERT.099": ("c11", ""), "CERT.100": ("explicit", "R22.10,SEC.errno.3")}
    merged = {k: v for k, v in assigned.items() if k != "CERT.050"}
    merged.update(added)
    for rule in sorted(merged):
        kind, ids = merged[rule]
        lines.append(row("certc2016", rule, "mc3a1", kind, ids))
    return lines


def main():
    rng = random.Random(17961)
    out = [
        "# seclint coverage mapping fixture.",
        "#",
        "# SYNTHETIC DATA. Rule ids and per-rule classifications are invented;",
        "# only the per-kind column totals reproduce the published coverage",
        "# tables. The CERT C totals were themselves published as preliminary,",
        "# unofficial data. Regenerate with tools/gen_mappings.py.",
        "#",
        "# <ruleset> | <rule_id> | <profile> | <kind> | <guideline_id>[,...]|-",
        "",
    ]
    out += ts17961(rng)
    out.append("")
    out += cert(rng)
    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
