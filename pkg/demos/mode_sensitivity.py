"""
Why the pixel order matters
===========================

A smooth color ramp looks hopeless to a pair replacer when channels
stay interleaved, yet collapses once the image is split into planes.
The reading order decides which redundancy sits next to each other.
"""

import numpy as np

from rpim import (
    CompressedArtifact,
    ImagePayload,
    LinearizationMode,
    PixelBuffer,
    compress,
    linearize,
    serialize,
)

# a 128x128 ramp over the full 24-bit range: every pixel differs from
# its neighbor, but each color plane changes very slowly
n = 128
idx = np.arange(n * n, dtype=np.int64)
value = idx * ((1 << 24) - 1) // (n * n - 1)
pixels = np.empty((n * n, 3), dtype=np.uint8)
pixels[:, 0] = (value >> 16) & 0xFF
pixels[:, 1] = (value >> 8) & 0xFF
pixels[:, 2] = value & 0xFF
buf = PixelBuffer(n, n, 3, pixels.tobytes())

print(f"gradient image: {n}x{n}, {len(buf.samples)} sample bytes\n")

# interleaved orders see R,G,B,R,G,B... with the fast-moving low byte
# breaking up every repeat; split orders give each plane its own run
for mode in LinearizationMode:
    stream = linearize(buf, mode)
    grammar, final = compress(stream)
    payload = ImagePayload(n, n, 3, mode)
    blob = serialize(CompressedArtifact(payload, grammar, final))
    ratio = len(blob) / len(buf.samples)
    verdict = "expands" if ratio > 1 else "compresses"
    print(f"{mode.label:>12}: ratio {ratio:.4f}  ({verdict}, "
          f"{len(grammar.rules)} rules)")

print("\nSame pixels, same algorithm; only the traversal changed.")
