#!/usr/bin/env python3
"""Show why the span category fails the pre-properad audit.

The nerve data of spans of finite sets has a composite of two nonzero
generators equal to the empty sum, so d1 is not induced by a map of
generating sets.  Restricting to spans whose forward legs are surjective
removes the failure.
"""

import argparse
import sys

from properads.segal import check_pre_properad, span_nerve_data


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size-bound", type=int, default=4)
    args = parser.parse_args()

    full = check_pre_properad(span_nerve_data(args.size_bound, surjective_only=False))
    print(f"all spans, size bound {args.size_bound}: "
          f"{'pre-properad' if full['ok'] else 'NOT a pre-properad'}")
    if not full["ok"]:
        print(f"  violation: {full['violation']}")
        for w in full.get("witnesses", [])[:3]:
            print(f"  witness chain: {w}")

    surj = check_pre_properad(span_nerve_data(args.size_bound, surjective_only=True))
    print(f"forward-surjective spans: "
          f"{'pre-properad' if surj['ok'] else 'NOT a pre-properad'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
