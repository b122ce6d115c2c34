"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 20]

Shapes match one minibatch of filter optimization (32 CIFAR images) and the
first convolution of cnn_a.  Prints milliseconds per call and the speedup.
"""

import argparse
import timeit

import numpy as np

from advfilter import _backend


def cases(rng):
    x = rng.uniform(0, 255, size=(32, 34, 34, 3))
    up = rng.normal(size=(32, 32, 32, 3))
    feat = rng.normal(size=(32, 34, 34, 8))
    cols = rng.normal(size=(32 * 32 * 32, 72))
    pool = rng.normal(size=(32, 32, 32, 16))
    k = rng.normal(size=(3, 3, 3))
    return {
        "depthwise_conv": lambda b: b.depthwise_conv(x, k),
        "kernel_grad": lambda b: b.depthwise_kernel_grad(x, up, 3),
        "im2col": lambda b: b.im2col(feat, 3, 1),
        "col2im": lambda b: b.col2im(cols, feat.shape, 3, 1),
        "maxpool2": lambda b: b.maxpool2_forward(pool),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    names = _backend.available()
    table = cases(np.random.default_rng(0))
    print(f"{'kernel':<16}" + "".join(f"{n + ' ms':>12}" for n in names)
          + ("     speedup" if len(names) > 1 else ""))
    for kernel, fn in table.items():
        times = []
        for n in names:
            impl = _backend.get(n)
            fn(impl)  # warm-up
            times.append(min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat)) * 1e3)
        line = f"{kernel:<16}" + "".join(f"{t:12.2f}" for t in times)
        if len(times) > 1:
            line += f"{times[0] / times[1]:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
