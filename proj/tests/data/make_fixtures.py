"""Regenerates the image fixtures in this directory (deterministic)."""
import math
import pathlib

here = pathlib.Path(__file__).parent


def pgm(name, w, h, samples):
    (here / name).write_bytes(f"P5\n{w} {h}\n255\n".encode() + bytes(samples))


def ppm(name, w, h, rgb):
    (here / name).write_bytes(f"P6\n{w} {h}\n255\n".encode() + bytes(v for px in rgb for v in px))


# 4x4 tiled with the 2x2 ramp block 255 170 / 85 0
ramp = [255, 170, 85, 0]
pgm("ramp4.pgm", 4, 4, [ramp[(r % 2) * 2 + (c % 2)] for r in range(4) for c in range(4)])

# 64x64 smooth field with an edge and texture
synth = []
for r in range(64):
    for c in range(64):
        v = 128 + 60 * math.sin(c / 7.0) * math.cos(r / 11.0) + (40 if (r - 32) ** 2 + (c - 20) ** 2 < 200 else 0)
        v += 20 * ((r * 7 + c * 13) % 5 == 0)
        synth.append(max(0, min(255, int(round(v)))))
pgm("synth64.pgm", 64, 64, synth)

rgb = []
for r in range(32):
    for c in range(32):
        rgb.append(((r * 8) % 256, (c * 8) % 256, (r * c) % 256))
ppm("rgb32.ppm", 32, 32, rgb)
