"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--size 512] [--repeat 7]

Each kernel is timed on both backends with identical inputs, and the outputs
are checked for bit-identity. The end-to-end augmentations are timed by
swapping the backend module in place.
"""
import argparse
import statistics
import time

import numpy as np

from fasaug import imgcore, sdsc, spsc
from fasaug._backend import available_backends
from fasaug.imgcore import gaussian_kernel
from fasaug.rng import RngStream


def median_ms(fn, repeat):
    fn()
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return 1000 * statistics.median(samples)


def kernel_cases(size):
    rng = np.random.default_rng(0)
    img = rng.integers(0, 256, (size, size, 3), dtype=np.uint8)
    other = rng.integers(0, 256, (size, size, 3), dtype=np.uint8)
    mask = rng.random((size, size))
    ys, xs = np.indices((size, size), dtype=np.float64)
    mx, my = xs * 0.97 + 3.2, ys * 1.03 - 1.7
    k = gaussian_kernel(4.0)
    return {
        "moire_remap": lambda K: K.moire_remap(img, 0.005),
        "hsv_adjust": lambda K: K.hsv_adjust(img, 0.1, 1.2),
        "blend": lambda K: K.blend(img, other, mask),
        "linear_u8": lambda K: K.linear_u8(img, 1.1, 12.0),
        "bilinear_remap_u8": lambda K: K.bilinear_remap_u8(img, mx, my),
        "blur_rows": lambda K: K.blur_rows(mask[..., None], k),
        "blur_cols": lambda K: K.blur_cols(mask[..., None], k),
    }


def pipeline_cases(size):
    img = np.random.default_rng(1).integers(0, 256, (size, size, 3), dtype=np.uint8)
    mask = sdsc.default_face_mask(size, size)
    return {
        "apply_spsc": lambda: spsc.apply_spsc(img, RngStream(1)),
        "apply_sdsc": lambda: sdsc.apply_sdsc(img, mask, RngStream(1)),
    }


def use_backend(module):
    for target in (imgcore, spsc, sdsc):
        target.kernels = module


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=512)
    ap.add_argument("--repeat", type=int, default=7)
    args = ap.parse_args()

    backends = available_backends()
    names = sorted(backends)
    if len(names) < 2:
        print("compiled backend not built; only numpy timings are shown")
    print(f"{args.size}x{args.size}, median of {args.repeat} runs (ms)")
    print(f"{'case':20s}" + "".join(f"{n:>10s}" for n in names) + ("   speedup  identical" if len(names) > 1 else ""))

    def row(label, timings, same=None):
        line = f"{label:20s}" + "".join(f"{timings[n]:10.2f}" for n in names)
        if len(names) > 1:
            line += f"{timings['numpy'] / timings['cython']:9.1f}x  {'yes' if same else 'NO'}"
        print(line)

    for label, case in kernel_cases(args.size).items():
        timings = {n: median_ms(lambda: case(backends[n]), args.repeat) for n in names}
        outs = [np.asarray(case(backends[n])) for n in names]
        row(label, timings, all(np.array_equal(outs[0], o) for o in outs[1:]))

    original = imgcore.kernels
    try:
        for label, case in pipeline_cases(args.size).items():
            timings, outs = {}, []
            for n in names:
                use_backend(backends[n])
                timings[n] = median_ms(case, args.repeat)
                outs.append(case())
            row(label, timings, all(np.array_equal(outs[0], o) for o in outs[1:]))
    finally:
        use_backend(original)


if __name__ == "__main__":
    main()
