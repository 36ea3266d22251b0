"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py --repeats 200

Shapes follow the desk-scale model (batch 8 x 32 tokens, d=64, 4 heads,
vocab 40). Both backends are imported directly, so the environment switch
that picks the default backend does not matter here.
"""

import argparse
import timeit

import numpy as np

from ar2dlm import _kernels_py as fallback

try:
    from ar2dlm import _kernels as compiled
except ImportError:  # extension not built
    compiled = None


def cases(rng, rows=256, d=64, heads=4, n=32, batch=8, vocab=40, mlp=256):
    f32 = np.float32
    x = rng.standard_normal((rows, d)).astype(f32)
    gain = np.ones(d, f32)
    _, rstd = fallback.rms_norm_fwd(x, gain, 1e-6)
    scores = rng.standard_normal((batch, heads, n, n)).astype(f32)
    allowed = np.broadcast_to(np.tril(np.ones((n, n), bool)), (batch, n, n)).copy()
    probs = fallback.softmax_fwd(scores)
    logits = rng.standard_normal((rows, vocab)).astype(f32)
    targets = rng.integers(0, vocab, rows)
    _, p = fallback.cross_entropy_fwd(logits, targets)
    q = rng.standard_normal((batch, heads, n, d // heads)).astype(f32)
    ang = rng.standard_normal((batch, n, d // heads // 2))
    cos, sin = np.cos(ang).astype(f32), np.sin(ang).astype(f32)
    h = rng.standard_normal((rows, mlp)).astype(f32)
    w = rng.standard_normal((d, mlp)).astype(f32)
    return {
        "rms_norm_fwd": ("rms_norm_fwd", (x, gain, 1e-6)),
        "rms_norm_bwd": ("rms_norm_bwd", (x, x, gain, rstd)),
        "softmax_fwd": ("softmax_fwd", (scores,)),
        "softmax_bwd": ("softmax_bwd", (scores, probs)),
        "masked_softmax_fwd": ("masked_softmax_fwd", (scores, allowed)),
        "cross_entropy_fwd": ("cross_entropy_fwd", (logits, targets)),
        "cross_entropy_bwd": ("cross_entropy_bwd", (p, targets, np.ones(rows))),
        "rope_fwd": ("rope_fwd", (q, cos, sin, False)),
        "silu_fwd": ("silu_fwd", (h,)),
        "silu_bwd": ("silu_bwd", (h, h)),
        "adamw_step": ("adamw_step", (w.copy(), w, np.zeros_like(w), np.zeros_like(w),
                                      1e-3, 0.9, 0.95, 1e-8, 0.01, 1)),
    }


def bench(fn, args, repeats):
    return min(timeit.repeat(lambda: fn(*args), number=repeats, repeat=3)) / repeats


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first")
        return 1
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<20}{'numpy us':>10}{'compiled us':>13}{'speedup':>9}")
    for label, (name, call_args) in cases(rng).items():
        slow = bench(getattr(fallback, name), call_args, args.repeats)
        fast = bench(getattr(compiled, name), call_args, args.repeats)
        print(f"{label:<20}{slow * 1e6:>10.1f}{fast * 1e6:>13.1f}{slow / fast:>8.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
