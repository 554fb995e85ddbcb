"""Expected dimensions and the speciality table for at most nine points.

A plane linear system L_d(n^m) asks for degree-d curves with a point of
multiplicity m at each of n general points.  Counting conditions gives the
expected dimension; for n <= 9 the special systems are known exactly.
"""

from seshadri import LinearSystem, classify_homogeneous_upto9, expected_dimension, parse_system

for text in ["d: 4; mults: 5^2", "d: 6; mults: 9^2", "d: 10; mults: 12^2"]:
    s = parse_system(text)
    print(f"{s}: expected dimension {expected_dimension(s)}")

# Five double points on a quartic: the conic through them, doubled, survives
# even though the count says nothing should.
print(classify_homogeneous_upto9(4, 5, 2))

print("special systems with n <= 9, d <= 8:")
for n in range(1, 10):
    for d in range(1, 9):
        for m in range(1, d + 1):
            v = classify_homogeneous_upto9(d, n, m)
            if v.rule.startswith("table-n"):
                print(f"  {LinearSystem.homogeneous(d, n, m)}  ({v.rule})")
