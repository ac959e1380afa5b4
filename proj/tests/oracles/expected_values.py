"""Independent oracles for the frozen expected values used in the C++ tests.

Straight-line numpy evaluation; shares no code with the library.
Run: python3 tests/oracles/expected_values.py
"""
import colorsys
import math
from pathlib import Path

import numpy as np

KX = np.array([[-1, 0, 1], [-2, 0, 2], [-1, 0, 1]], dtype=float)
KY = KX.T


def sobel(img):
    img = np.asarray(img, dtype=float)
    pad = np.pad(img, 1, mode="edge")
    h, w = img.shape
    out = np.zeros_like(img)
    for y in range(h):
        for x in range(w):
            win = pad[y:y + 3, x:x + 3]
            gx = (win * KX).sum()
            gy = (win * KY).sum()
            out[y, x] = math.sqrt(gx * gx + gy * gy)
    return out


def entropy_bits(values):
    bins = np.clip(np.floor(np.asarray(values, dtype=float) + 0.5), 0, 255).astype(int)
    counts = np.bincount(bins.ravel(), minlength=256)
    p = counts[counts > 0] / bins.size
    return float(-(p * np.log2(p)).sum())


def fitness(img, edge_threshold=20.0):
    mag = sobel(img)
    e = mag.sum()
    ne = int((mag > edge_threshold).sum())
    h = entropy_bits(mag)
    f = -math.inf if e <= math.e else math.log(math.log(e)) * ne / mag.size * h
    return f, e, ne, h


def main():
    step = np.zeros((4, 4))
    step[:, 2:] = 255
    print("step edge sobel:\n", sobel(step))

    dot = np.zeros((5, 5))
    dot[2, 2] = 255
    print("single bright pixel sobel:\n", sobel(dot))

    board = np.fromfunction(lambda y, x: ((x + y) % 2) * 255, (8, 8))
    f, e, ne, h = fitness(board)
    print(f"checkerboard: F={f!r} E={e!r} ne={ne} H={h!r}")
    print("checkerboard sobel:\n", sobel(board))

    print("entropy {0:8,100:4,200:4} =", entropy_bits([0] * 8 + [100] * 4 + [200] * 4))

    mu_dark = (127 - 64) / 127
    mu_gray = 1 - abs(64 - 127) / 96
    v0 = (mu_dark * 0 + mu_gray * 127) / (mu_dark + mu_gray)
    print(f"defuzzify default traptri z=64: mu_dark={mu_dark!r} mu_gray={mu_gray!r} v0={v0!r}")

    cdf50, cdf60, total = 8, 16, 16
    print("HE two-level:", 255 * cdf50 // total, 255 * cdf60 // total)

    step128 = np.zeros((8, 8)); step128[:, 4:] = 128
    step255 = np.zeros((8, 8)); step255[:, 4:] = 255
    print("step 0/128 fitness:", fitness(step128))
    print("step 0/255 fitness:", fitness(step255))

    h, s_, v = colorsys.rgb_to_hsv(200 / 255, 100 / 255, 50 / 255)
    print(f"hsv(200,100,50): hue_sextant={h * 6!r} s={s_!r} v={v * 255!r}")

    write_png_fixture()


def write_png_fixture():
    """3x2 RGB PNG written by PIL; the C++ test compares decoded bytes."""
    from PIL import Image

    pixels = [(255, 0, 0), (0, 255, 0), (0, 0, 255),
              (200, 100, 50), (17, 34, 51), (255, 255, 255)]
    img = Image.new("RGB", (3, 2))
    img.putdata(pixels)
    out = Path(__file__).resolve().parent.parent / "data" / "rgb_3x2.png"
    img.save(out)
    print("wrote", out, "bytes:", [c for px in pixels for c in px])


if __name__ == "__main__":
    main()
