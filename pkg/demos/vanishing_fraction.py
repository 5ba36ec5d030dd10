"""The vanishing fraction: 0 = 1 - 1/(3 - 4/(5 - 9/(7 - 16/(9 - ...)))).

This is the logarithm family pushed to its boundary m = n, where the value
collapses to zero.  Truncations never reach 0 -- they decrease strictly
(it turns out the k-term truncation equals 1/(1 + 1/2 + ... + 1/(k+1)), a
harmonic crawl) -- but the fraction's self-similar tails certify the
identity: peeling the leading term forces

    1 = 3 - 4/(5 - 9/(7 - ...)),   2 = 5 - 9/(7 - 16/(9 - ...)),   ...

i.e. the tail starting at 2k+1 equals k, with the same structure repeating
forever.
"""

from quadcf import convergents, degenerate_cf_spec, degenerate_tail, degenerate_tail_spec

if __name__ == "__main__":
    cf = degenerate_cf_spec()
    print("truncations of 1 - 1/(3 - 4/(5 - 9/(7 - ...))):")
    cs = convergents(cf, 1000)
    for k in (1, 2, 3, 5, 10, 100, 1000):
        c = cs[k]
        print(f"  depth {k:>4}: {float(c.value):.6f}" + (f"  = {c.p}/{c.q}" if k <= 5 else ""))
    print("  (positive and strictly decreasing toward 0)\n")

    print("tails T_k -> k (each row truncated ever deeper):")
    for k in range(1, 6):
        vals = [float(degenerate_tail(k, d, 96)) for d in (0, 1, 2, 5, 20, 200)]
        print(f"  T_{k}: " + "  ".join(f"{v:.6f}" for v in vals) + f"   -> {k}")

    print("\nexactness check at depth 1000: every tail still sits above its limit")
    for k in range(1, 6):
        c = convergents(degenerate_tail_spec(k), 1000)[1000]
        print(f"  T_{k}(1000) - {k} = {float(c.value - k):.6e} > 0")
