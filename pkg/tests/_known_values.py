"""Fixed reference values for the acceptance tests.

Every list here was double-checked by direct reciprocal-sum arithmetic
before being frozen; the tests re-verify them with stdlib Fractions so a
regression in this package's own arithmetic cannot mask a drift.
"""

# Unique densest witnesses: the smallest-possible maximal denominators for
# targets 3 and 4 (the start of the by-target sequence 1, 6, 24, 65, 184, 469;
# see OEIS A101877).
DENSEST_WITNESS_3 = (
    1, 2, 3, 4, 5, 6, 8, 9, 10, 15, 18, 20, 24,
)

DENSEST_WITNESS_4 = (
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20, 22, 24, 26, 27,
    28, 30, 33, 35, 36, 40, 42, 45, 48, 52, 54, 56, 60, 63, 65,
)

# One of the 16 witnesses for target 5 (all 16 contain 136).
DENSEST_WITNESS_5 = (
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22,
    23, 24, 25, 26, 27, 28, 29, 30, 32, 33, 34, 35, 36, 38, 39, 40, 42, 44, 45, 46,
    48, 50, 51, 52, 54, 55, 56, 60, 62, 63, 65, 66, 68, 70, 72, 75, 76, 77, 78, 80,
    81, 84, 85, 88, 90, 91, 92, 93, 95, 99, 102, 104, 105, 108, 110, 112, 114, 115,
    116, 117, 120, 126, 130, 132, 133, 136, 140, 143, 144, 145, 150, 152, 153, 154,
    155, 156, 160, 161, 162, 168, 170, 171, 175, 180, 184,
)

# One of the 224 witnesses for target 6; notably it omits 136, so it cannot
# contain any witness for target 5.
DENSEST_WITNESS_6 = (
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22,
    23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42,
    43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 60, 61, 62, 63,
    64, 65, 66, 67, 68, 69, 70, 72, 74, 75, 76, 77, 78, 80, 81, 82, 84, 85, 86, 87,
    88, 90, 91, 92, 93, 94, 95, 96, 98, 99, 100, 102, 104, 105, 106, 108, 110, 111,
    112, 114, 115, 116, 117, 118, 119, 120, 121, 122, 123, 124, 126, 128, 129, 130,
    132, 133, 134, 135, 138, 140, 141, 143, 144, 145, 147, 148, 150, 152, 153, 154,
    155, 156, 159, 160, 161, 162, 164, 165, 168, 170, 171, 174, 175, 176, 180, 182,
    183, 184, 185, 186, 187, 188, 189, 190, 192, 195, 196, 198, 200, 201, 203, 204,
    205, 207, 208, 209, 210, 212, 215, 216, 217, 220, 221, 224, 225, 228, 230, 231,
    232, 234, 238, 240, 242, 245, 246, 247, 248, 250, 252, 253, 255, 258, 259, 260,
    261, 264, 266, 268, 270, 272, 273, 275, 276, 280, 282, 285, 286, 287, 288, 290,
    294, 295, 296, 297, 299, 300, 301, 304, 305, 306, 308, 310, 312, 315, 319, 320,
    322, 324, 325, 328, 329, 330, 333, 336, 340, 341, 342, 344, 345, 348, 350, 351,
    352, 357, 360, 363, 364, 368, 372, 374, 375, 376, 377, 378, 380, 384, 385, 387,
    390, 396, 399, 400, 402, 405, 406, 408, 413, 414, 416, 418, 420, 424, 425, 429,
    430, 432, 434, 435, 440, 442, 444, 448, 451, 455, 456, 460, 462, 465, 468, 469,
)

# Known representations of 1 whose second-largest element is d and whose
# largest is c*d, for every d from 5 through 30.
SECOND_LARGEST_TABLE = (
    (5, 4, (2, 4, 5, 20)),
    (6, 2, (2, 4, 6, 12)),
    (7, 6, (2, 3, 7, 42)),
    (8, 3, (2, 3, 8, 24)),
    (9, 2, (2, 3, 9, 18)),
    (10, 3, (2, 5, 6, 10, 30)),
    (11, 120, (3, 4, 5, 8, 11, 1320)),
    (12, 2, (2, 4, 8, 12, 24)),
    (13, 12, (2, 4, 6, 13, 156)),
    (14, 6, (2, 4, 6, 14, 84)),
    (15, 4, (2, 4, 6, 15, 60)),
    (16, 3, (2, 4, 6, 16, 48)),
    (17, 16, (2, 4, 8, 16, 17, 272)),
    (18, 2, (2, 4, 6, 18, 36)),
    (19, 56, (2, 4, 8, 14, 19, 1064)),
    (20, 3, (3, 4, 5, 12, 15, 20, 60)),
    (21, 20, (2, 4, 5, 21, 420)),
    (22, 10, (2, 4, 5, 22, 220)),
    (23, 45, (2, 3, 15, 18, 23, 1035)),
    (24, 5, (2, 4, 5, 24, 120)),
    (25, 4, (2, 4, 5, 25, 100)),
    (26, 12, (2, 3, 8, 26, 312)),
    (27, 35, (2, 5, 7, 14, 21, 27, 945)),
    (28, 3, (2, 3, 14, 21, 28, 84)),
    (29, 28, (2, 4, 7, 14, 29, 812)),
    (30, 2, (2, 4, 5, 30, 60)),
)

# The d = 6000 capstone of the same family.
SECOND_LARGEST_6000 = (5, 6, 7, 8, 9, 14, 15, 19, 38, 56, 95, 114, 6000, 2394000)

# The unique representation of 1/2 by distinct squares with all squares at
# most 35**2.
SQUARE_HALF_WITNESS = (4, 9, 16, 25, 49, 144, 225, 400, 784, 1225)
