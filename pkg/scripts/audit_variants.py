"""Evaluate the alternative formula readings against the reference weights.

    python scripts/audit_variants.py
"""

from mcdm_compare.audit import WEIGHT_TOLERANCE, audit_ram_formula, audit_weights, format_audit


def main():
    print(f"weight variants (tolerance {WEIGHT_TOLERANCE})")
    print(format_audit(audit_weights()))
    print()
    print("RAM final score for B15, equal weights")
    for c in audit_ram_formula():
        print(f"  {c.formula:8} score {c.b15_score:.4f}  rank {c.b15_rank:2d}  column mean {c.mean_score:.4f}")


if __name__ == "__main__":
    main()
