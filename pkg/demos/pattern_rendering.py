"""Draw encoded values as small black-and-white patterns.

A value's m = 2^n bits fill a grid row by row, most significant bit in the
top-left corner. The same integer that drives the circuits is also a tiny
image, which makes weights and inputs easy to eyeball.
"""

from qperc import pattern_grid, render_ascii, render_pgm

print("value 12 at n = 2 (2 x 2):")
print(render_ascii(pattern_grid(12, 2)))

print("\nvalue 626 at n = 4 (4 x 4):")
print(render_ascii(pattern_grid(626, 4)))

print("\nthe complement, value", 626 ^ 0xFFFF, "(inverts every cell):")
print(render_ascii(pattern_grid(626 ^ 0xFFFF, 4)))

print("\nsame value reflowed to 2 x 8:")
print(render_ascii(pattern_grid(626, 4, rows=2, cols=8)))

pgm = render_pgm(pattern_grid(626, 4))
print(f"\nPGM export: {len(pgm)} bytes, header {pgm[:11]!r}")
print("set bits map to black pixels (gray value 0)")
