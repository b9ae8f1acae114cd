#!/usr/bin/env python3
"""
Store Inspection Script - list what the result store has cached.

Usage:
    python scripts/inspect_store.py
    python scripts/inspect_store.py --arrows --verdict NOT_ARROWS
    python scripts/inspect_store.py --families --db /tmp/results.sqlite
"""

import argparse
import sys
from pathlib import Path

# Add parent directory to path to import ordered_ramsey
sys.path.insert(0, str(Path(__file__).parent.parent))

from ordered_ramsey.config import RESULTS_DB_PATH
from ordered_ramsey.store import ResultStore


def display_arrows(store: ResultStore, verdict: str = None, show_witness: bool = False) -> None:
    """
    Print cached arrow results.

    Args:
        store: Open ResultStore
        verdict: Only show rows with this verdict
        show_witness: Print witness colorings under each row
    """
    rows = [r for r in store.arrow_rows() if verdict is None or r["verdict"] == verdict]
    print(f"\n{'=' * 60}")
    print(f"Arrow results ({len(rows)})")
    print(f"{'=' * 60}")
    for row in sorted(rows, key=lambda r: (r["h"], r["h2"], r["f"])):
        print(f"{row['verdict']:<11} F={row['f']}  H={row['h']}  H'={row['h2']}  nodes={row['nodes']}")
        if show_witness and row["witness"]:
            for line in row["witness"].splitlines():
                print(f"    {line}")
    print()


def display_families(store: ResultStore) -> None:
    """Print cached minimal-graph enumerations."""
    families = store.families()
    print(f"\n{'=' * 60}")
    print(f"Minimal families ({len(families)})")
    print(f"{'=' * 60}")
    if not families:
        print("No enumerations cached.")
    for fam in families:
        edges = "any" if fam.max_edges < 0 else str(fam.max_edges)
        print(f"H={fam.h}  H'={fam.h2}  max_vertices={fam.max_vertices}  max_edges={edges}")
        for i, member in enumerate(fam.members, 1):
            print(f"  {i}. {member}")
    print()


def main():
    """Main entry point for the store inspection script."""
    parser = argparse.ArgumentParser(
        description="Inspect the ordered-ramsey result store (SQLite)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Everything
  python scripts/inspect_store.py

  # Only refuted hosts, with their witness colorings
  python scripts/inspect_store.py --arrows --verdict NOT_ARROWS --witness
        """
    )
    parser.add_argument("--db", default=RESULTS_DB_PATH, help=f"Database file (default: {RESULTS_DB_PATH})")
    parser.add_argument("--arrows", action="store_true", help="Show only arrow results")
    parser.add_argument("--families", action="store_true", help="Show only minimal families")
    parser.add_argument("--verdict", choices=("ARROWS", "NOT_ARROWS"), default=None)
    parser.add_argument("--witness", action="store_true", help="Print witness colorings")
    args = parser.parse_args()

    if not Path(args.db).exists():
        print(f"No result store at {args.db}", file=sys.stderr)
        sys.exit(1)

    try:
        store = ResultStore(args.db)
        show_all = not (args.arrows or args.families)
        if args.arrows or show_all:
            display_arrows(store, args.verdict, args.witness)
        if args.families or show_all:
            display_families(store)
    except KeyboardInterrupt:
        print("\n\nInterrupted by user.", file=sys.stderr)
        sys.exit(1)
    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
