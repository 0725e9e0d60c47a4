"""Tour of the six-kind pair taxonomy.

Any two requests placed in two slots fall into one of six kinds, determined
by how many crossings the pair produces as placed versus with the two slots
swapped. The minimum of the two counts is unavoidable (no offline solution
can do better on that pair); the difference is avoidable.

Run: python3 demos/01_pair_taxonomy.py
"""

from oscm.crossings import classify_pair, pair_crossings
from oscm.model import Request

EXAMPLES = [
    ("duplicated pair", Request(1, 2), 1, Request(1, 2), 2),
    ("one shared endpoint", Request(1, 2), 1, Request(1, 3), 2),
    ("interleaved, crossing order", Request(1, 3), 1, Request(2, 4), 2),
    ("disjoint, crossing order", Request(3, 4), 1, Request(1, 2), 2),
    ("disjoint, sorted order", Request(1, 2), 1, Request(3, 4), 2),
    ("nested", Request(1, 4), 1, Request(2, 3), 2),
]


def main() -> None:
    header = f"{'description':28} {'kind':8} {'placed':>6} {'swapped':>7} {'unavoid':>7} {'avoid':>5}"
    print(header)
    print("-" * len(header))
    for desc, r1, s1, r2, s2 in EXAMPLES:
        c = classify_pair(r1, s1, r2, s2)
        print(
            f"{desc:28} {c.kind.name:8} {c.placed_count:>6} "
            f"{c.swapped_count:>7} {c.unavoidable:>7} {c.avoidable:>5}"
        )

    print()
    print("A pair in crossing order can always be un-inverted for free:")
    r1, s1, r2, s2 = Request(3, 4), 1, Request(1, 2), 4
    print(f"  ({r1.a},{r1.b})@{s1} and ({r2.a},{r2.b})@{s2}: "
          f"{pair_crossings(r1, s1, r2, s2)} crossings as placed, "
          f"{pair_crossings(r1, s2, r2, s1)} after swapping the slots.")


if __name__ == "__main__":
    main()
