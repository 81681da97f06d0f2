"""Expected outputs for the bundled 19-bank dataset.

Values are the 4-decimal figures reported for the case study (the TOPSIS
LOPCOW column is reported to 3 decimals). Alternatives are in order
B1..B19; weighting methods in order Equal, Entropy, MEREC, LOPCOW, SPC.
"""

WEIGHTING_ORDER = ("Equal", "Entropy", "MEREC", "LOPCOW", "SPC")
RANKING_ORDER = ("Probability", "TOPSIS", "RAM")

WEIGHTS = {
    "Equal": (0.1429, 0.1429, 0.1429, 0.1429, 0.1429, 0.1429, 0.1429),
    "Entropy": (0.1809, 0.1926, 0.1116, 0.0920, 0.1535, 0.0949, 0.1745),
    "MEREC": (0.0381, 0.0722, 0.1137, 0.1673, 0.1061, 0.2755, 0.2270),
    "LOPCOW": (0.1562, 0.0931, 0.1672, 0.2321, 0.1173, 0.2051, 0.0289),
    "SPC": (0.0178, 0.0261, 0.0824, 0.1110, 0.0658, 0.4228, 0.2740),
}
WEIGHT_MAX_MIN = (10.15, 7.37, 2.03, 2.52, 2.33, 4.45, 9.48)

PROBABILITY_SCORES = {
    "Equal": (
        0.0446, 0.0428, 0.0614, 0.0350, 0.0651, 0.0639, 0.0662, 0.0542, 0.0540, 0.0559,
        0.0494, 0.0510, 0.0563, 0.0394, 0.0239, 0.0494, 0.0490, 0.0473, 0.0566,
    ),
    "Entropy": (
        0.0456, 0.0450, 0.0596, 0.0371, 0.0630, 0.0625, 0.0634, 0.0552, 0.0538, 0.0550,
        0.0494, 0.0494, 0.0557, 0.0413, 0.0252, 0.0519, 0.0501, 0.0496, 0.0540,
    ),
    "MEREC": (
        0.0455, 0.0430, 0.0636, 0.0325, 0.0673, 0.0663, 0.0698, 0.0543, 0.0537, 0.0562,
        0.0467, 0.0549, 0.0576, 0.0415, 0.0141, 0.0504, 0.0485, 0.0465, 0.0557,
    ),
    "LOPCOW": (
        0.0426, 0.0398, 0.0630, 0.0335, 0.0673, 0.0649, 0.0688, 0.0530, 0.0544, 0.0572,
        0.0508, 0.0518, 0.0571, 0.0355, 0.0269, 0.0455, 0.0481, 0.0448, 0.0604,
    ),
    "SPC": (
        0.0483, 0.0462, 0.0637, 0.0338, 0.0667, 0.0658, 0.0691, 0.0552, 0.0534, 0.0549,
        0.0456, 0.0568, 0.0581, 0.0457, 0.0090, 0.0522, 0.0506, 0.0486, 0.0524,
    ),
}
PROBABILITY_RANKS = {
    "Equal": (
        15, 16, 4, 18, 2, 3, 1, 8, 9, 7, 11, 10, 6, 17, 19, 12, 13, 14, 5,
    ),
    "Entropy": (
        15, 16, 4, 18, 2, 3, 1, 6, 9, 7, 13, 14, 5, 17, 19, 10, 11, 12, 8,
    ),
    "MEREC": (
        15, 16, 4, 18, 2, 3, 1, 9, 10, 6, 13, 8, 5, 17, 19, 11, 12, 14, 7,
    ),
    "LOPCOW": (
        15, 16, 4, 18, 2, 3, 1, 9, 8, 6, 11, 10, 7, 17, 19, 13, 12, 14, 5,
    ),
    "SPC": (
        14, 15, 4, 18, 2, 3, 1, 7, 9, 8, 17, 6, 5, 16, 19, 11, 12, 13, 10,
    ),
}
TOPSIS_SCORES = {
    "Equal": (
        0.6151, 0.5940, 0.8204, 0.4267, 0.8603, 0.8378, 0.8802, 0.6920, 0.6804, 0.6939,
        0.5786, 0.6981, 0.7245, 0.5962, 0.1574, 0.6562, 0.6397, 0.6188, 0.6723,
    ),
    "Entropy": (
        0.6329, 0.6153, 0.8037, 0.4089, 0.8431, 0.8385, 0.8545, 0.7042, 0.6732, 0.6778,
        0.5525, 0.6740, 0.7062, 0.6472, 0.1679, 0.6917, 0.6322, 0.6307, 0.6400,
    ),
    "MEREC": (
        0.7101, 0.6956, 0.8872, 0.4947, 0.9213, 0.9085, 0.9478, 0.7779, 0.7406, 0.7477,
        0.6162, 0.8022, 0.8023, 0.6864, 0.0847, 0.7547, 0.7306, 0.7116, 0.6730,
    ),
    "LOPCOW": (
        0.580, 0.563, 0.832, 0.443, 0.880, 0.840, 0.902, 0.681, 0.685, 0.715,
        0.605, 0.710, 0.745, 0.504, 0.159, 0.618, 0.642, 0.605, 0.706,
    ),
    "SPC": (
        0.7662, 0.7641, 0.9208, 0.5418, 0.9469, 0.9421, 0.9714, 0.8365, 0.7753, 0.7725,
        0.6479, 0.8560, 0.8525, 0.7261, 0.0407, 0.8238, 0.7995, 0.7814, 0.6680,
    ),
}
TOPSIS_RANKS = {
    "Equal": (
        14, 16, 4, 18, 2, 3, 1, 8, 9, 7, 17, 6, 5, 15, 19, 11, 12, 13, 10,
    ),
    "Entropy": (
        13, 16, 4, 18, 2, 3, 1, 6, 10, 8, 17, 9, 5, 11, 19, 7, 14, 15, 12,
    ),
    "MEREC": (
        13, 14, 4, 18, 2, 3, 1, 7, 10, 9, 17, 6, 5, 15, 19, 8, 11, 12, 16,
    ),
    "LOPCOW": (
        15, 16, 4, 18, 2, 3, 1, 10, 9, 6, 13, 7, 5, 17, 19, 12, 11, 14, 8,
    ),
    "SPC": (
        13, 14, 4, 18, 2, 3, 1, 7, 11, 12, 17, 5, 6, 15, 19, 8, 9, 10, 16,
    ),
}
RAM_SCORES = {
    "Equal": (
        1.4213, 1.4209, 1.4279, 1.4170, 1.4294, 1.4289, 1.4302, 1.4249, 1.4242, 1.4250,
        1.4223, 1.4241, 1.4257, 1.4202, 1.4133, 1.4240, 1.4230, 1.4225, 1.4253,
    ),
    "Entropy": (
        1.4222, 1.4221, 1.4276, 1.4183, 1.4290, 1.4288, 1.4295, 1.4256, 1.4246, 1.4252,
        1.4229, 1.4240, 1.4258, 1.4216, 1.4150, 1.4253, 1.4237, 1.4236, 1.4249,
    ),
    "MEREC": (
        1.4150, 1.4143, 1.4225, 1.4082, 1.4241, 1.4237, 1.4254, 1.4185, 1.4173, 1.4183,
        1.4140, 1.4190, 1.4199, 1.4144, 1.4001, 1.4178, 1.4163, 1.4155, 1.4177,
    ),
    "LOPCOW": (
        1.4221, 1.4215, 1.4300, 1.4184, 1.4318, 1.4309, 1.4327, 1.4262, 1.4260, 1.4272,
        1.4245, 1.4261, 1.4279, 1.4195, 1.4152, 1.4243, 1.4246, 1.4235, 1.4283,
    ),
    "SPC": (
        1.4099, 1.4093, 1.4171, 1.4018, 1.4186, 1.4182, 1.4199, 1.4132, 1.4113, 1.4118,
        1.4071, 1.4140, 1.4147, 1.4095, 1.3889, 1.4124, 1.4113, 1.4103, 1.4100,
    ),
}
RAM_RANKS = {
    "Equal": (
        15, 16, 4, 18, 2, 3, 1, 8, 9, 7, 14, 10, 5, 17, 19, 11, 12, 13, 6,
    ),
    "Entropy": (
        15, 16, 4, 18, 2, 3, 1, 6, 10, 8, 14, 11, 5, 17, 19, 7, 12, 13, 9,
    ),
    "MEREC": (
        14, 16, 4, 18, 2, 3, 1, 7, 11, 8, 17, 6, 5, 15, 19, 9, 12, 13, 10,
    ),
    "LOPCOW": (
        15, 16, 4, 18, 2, 3, 1, 8, 10, 7, 12, 9, 6, 17, 19, 13, 11, 14, 5,
    ),
    "SPC": (
        14, 16, 4, 18, 2, 3, 1, 7, 11, 9, 17, 6, 5, 15, 19, 8, 10, 12, 13,
    ),
}

SCORES = {"Probability": PROBABILITY_SCORES, "TOPSIS": TOPSIS_SCORES, "RAM": RAM_SCORES}
RANKS = {"Probability": PROBABILITY_RANKS, "TOPSIS": TOPSIS_RANKS, "RAM": RAM_RANKS}
# decimals reported per column; everything else is 4
SCORE_DECIMALS = {("TOPSIS", "LOPCOW"): 3}

# rows: ranking method; columns: weighting method
R_SCORES = {
    "Probability": (2.7678, 2.5141, 4.9441, 2.5588, 7.6535),
    "TOPSIS": (5.5911, 5.0883, 11.1875, 5.6596, 23.8572),
    "RAM": (1.0119, 1.0103, 1.0181, 1.0124, 1.0223),
}

# upper triangle in row-major order:
# (Equal, Entropy), (Equal, MEREC), (Equal, LOPCOW), (Equal, SPC),
# (Entropy, MEREC), (Entropy, LOPCOW), (Entropy, SPC),
# (MEREC, LOPCOW), (MEREC, SPC), (LOPCOW, SPC)
SPEARMAN = {
    "Probability": (0.9596, 0.9842, 0.9947, 0.9246, 0.9526, 0.9491, 0.9193, 0.9789, 0.9632, 0.9140),
    "TOPSIS": (0.9474, 0.9491, 0.9702, 0.9123, 0.9421, 0.8842, 0.8930, 0.8842, 0.9825, 0.8404),
    "RAM": (0.9719, 0.9509, 0.9877, 0.9105, 0.9596, 0.9404, 0.9439, 0.9246, 0.9860, 0.8772),
}
# as reported; the Probability figure is not the mean of its own entries (0.9540)
SPEARMAN_AVERAGE_REPORTED = {"Probability": 0.9699, "TOPSIS": 0.9205, "RAM": 0.9453}
