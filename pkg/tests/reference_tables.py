"""Tables transcribed from the worked examples; each row is (generator, *terms)."""

# order-4 chromoform generated by 1, with its parity table
CHROMOFORM_1_4 = [
    (1, 2, 1, 2, 1), (3, 5, 8, 4, 2), (5, 8, 4, 2, 1), (7, 11, 17, 26, 13),
    (9, 14, 7, 11, 17), (11, 17, 26, 13, 20), (13, 20, 10, 5, 8), (15, 23, 35, 53, 80),
    (17, 26, 13, 20, 10), (19, 29, 44, 22, 11), (21, 32, 16, 8, 4), (23, 35, 53, 80, 40),
    (25, 38, 19, 29, 44), (27, 41, 62, 31, 47), (29, 44, 22, 11, 17), (31, 47, 71, 107, 161),
]
STRUCTURE_1_4 = [
    "0101", "1000", "0001", "1101", "0111", "1010", "0010", "1110",
    "0100", "1001", "0000", "1100", "0110", "1011", "0011", "1111",
]

CHROMOFORM_2_3 = [
    (2, 1, 2, 1), (4, 2, 1, 2), (6, 3, 5, 8), (8, 4, 2, 1),
    (10, 5, 8, 4), (12, 6, 3, 5), (14, 7, 11, 17), (16, 8, 4, 2),
]
STRUCTURE_2_3 = ["101", "010", "110", "001", "100", "011", "111", "000"]

# every chromoform of the order-3 polychromoform started at 1 shares this table
STRUCTURE_POLY_1_3 = ["010", "100", "000", "110", "011", "101", "001", "111"]

# prolongation of the 16-row chromologue of 7 at order 4 by 4 columns
PROLONGED_7_4 = [
    (7, 11, 17, 26, 13, 20, 10, 5, 8),
    (39, 59, 89, 134, 67, 101, 152, 76, 38),
    (71, 107, 161, 242, 121, 182, 91, 137, 206),
    (103, 155, 233, 350, 175, 263, 395, 593, 890),
    (135, 203, 305, 458, 229, 344, 172, 86, 43),
    (167, 251, 377, 566, 283, 425, 638, 319, 479),
    (199, 299, 449, 674, 337, 506, 253, 380, 190),
    (231, 347, 521, 782, 391, 587, 881, 1322, 661),
    (263, 395, 593, 890, 445, 668, 334, 167, 251),
    (295, 443, 665, 998, 499, 749, 1124, 562, 281),
    (327, 491, 737, 1106, 553, 830, 415, 623, 935),
    (359, 539, 809, 1214, 607, 911, 1367, 2051, 3077),
    (391, 587, 881, 1322, 661, 992, 496, 248, 124),
    (423, 635, 953, 1430, 715, 1073, 1610, 805, 1208),
    (455, 683, 1025, 1538, 769, 1154, 577, 866, 433),
    (487, 731, 1097, 1646, 823, 1235, 1853, 2780, 1390),
]

# chromologue of 5 at order 4, first rows
CHROMOLOGUE_5_4 = [(5, 8, 4, 2, 1), (37, 56, 28, 14, 7), (69, 104, 52, 26, 13)]

# super-decomposition of the order-3 polychromoform from 1, five blocks
SUPER_DECOMPOSITION_1_3 = {
    1: [(1, 2, 1, 2), (17, 26, 13, 20), (33, 50, 25, 38), (49, 74, 37, 56), (65, 98, 49, 74)],
    7: [(7, 11, 17, 26), (23, 35, 53, 80), (39, 59, 89, 134), (55, 83, 125, 188), (71, 107, 161, 242)],
    15: [(15, 23, 35, 53), (31, 47, 71, 107), (47, 71, 107, 161), (63, 95, 143, 215), (79, 119, 179, 269)],
}

# periodic word 101 repeated k times then a closing 1: full printed trajectories
CYCLIC_101_1 = [
    (9, 14, 7, 11),
    (121, 182, 91, 137, 206, 103, 155),
    (1017, 1526, 763, 1145, 1418, 859, 1289, 1934, 967, 1451),
    (8185, 12278, 6139, 9209, 13814, 6907, 10361, 15542, 7771, 11657, 17486, 8743, 13115),
]

# isoform family at n = 5 (generators differ by 2**6)
ISOFORM_FAMILY_7 = [7, 71, 135, 199]
