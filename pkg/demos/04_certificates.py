"""Recursive proofs of non-speciality, and checking them independently.

The prover splits L_d(n^m) into a smaller homogeneous system and a
quasi-homogeneous one.  Every proof is a hashed tree that a separate
checker re-derives from scratch.
"""

import dataclasses
import json

from seshadri import LinearSystem, MemoCache, prove, verify_certificate
from seshadri.verify import certificate_problems

cache = MemoCache()
out = prove(LinearSystem.homogeneous(10, 12, 2), cache=cache)
print(out.tag, out.certificate.witness)
print(json.dumps(out.certificate.to_json(), indent=1)[:600], "...")
print("verifies:", verify_certificate(out.certificate))

forged = dataclasses.replace(out.certificate, witness={"k": 3, "b": 4}, hash="")
print("forged witness:", certificate_problems(forged))

# Degree 8 is out of reach of these rules, and the prover says so.
print(prove(LinearSystem.homogeneous(8, 12, 2), cache=cache).tag)
print(f"{len(cache)} systems memoized")
