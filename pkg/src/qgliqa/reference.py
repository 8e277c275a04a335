"""Published SROCC values for side-by-side comparison with local runs.

These are fixed numbers, not computed. ``TABLE1`` maps a metric to its
whole-database SROCC on LIVE, CSIQ and TID2013 plus the weighted average;
``TABLE2`` maps ``(database, distortion)`` to per-metric SROCC.
"""

DATABASE_SIZES = {"LIVE": 779, "CSIQ": 866, "TID2013": 3000}

TABLE1_COLUMNS = ("LIVE", "CSIQ", "TID2013", "weighted_average")

TABLE1 = {
    "PSNR": (0.8756, 0.8058, 0.6394, 0.7100),
    "SSIM": (0.9479, 0.8756, 0.7417, 0.8012),
    "MS-SSIM": (0.9513, 0.9133, 0.7859, 0.8374),
    "IW-SSIM": (0.9567, 0.9213, 0.7779, 0.8346),
    "IFC": (0.9259, 0.7671, 0.5390, 0.6463),
    "VIF": (0.9636, 0.9195, 0.6770, 0.7703),
    "FSIM": (0.9634, 0.9240, 0.8022, 0.8519),
    "NLOG-MSE": (0.9405, 0.9259, 0.7734, 0.8299),
    "NLOG-COR": (0.9429, 0.9308, 0.7772, 0.8336),
    "GMSD": (0.9603, 0.9570, 0.8044, 0.8590),
    "RFSIM": (0.9438, 0.9292, 0.7744, 0.8317),
    "mQGL": (0.9524, 0.9227, 0.7903, 0.8422),
    "sQGL": (0.9574, 0.9550, 0.8103, 0.8619),
}

TABLE2_METRICS = ("PSNR", "SSIM", "MS-SSIM", "IW-SSIM", "IFC", "VIF", "FSIM", "GMSD",
                  "NLOG-MSE", "NLOG-COR", "mQGL", "sQGL")

_TABLE2_ROWS = [
    ("LIVE", "JP2K", 0.8954, 0.9614, 0.9654, 0.9653, 0.9100, 0.9683, 0.9717, 0.9711, 0.9499, 0.9515, 0.9668, 0.9704),
    ("LIVE", "JPEG", 0.8809, 0.9764, 0.9793, 0.9809, 0.9440, 0.9842, 0.9834, 0.9782, 0.9610, 0.9629, 0.9800, 0.9805),
    ("LIVE", "WN", 0.9854, 0.9694, 0.9731, 0.9671, 0.9377, 0.9845, 0.9652, 0.9737, 0.9877, 0.9880, 0.9591, 0.9694),
    ("LIVE", "GB", 0.7823, 0.9517, 0.9584, 0.9722, 0.9649, 0.9722, 0.9708, 0.9567, 0.9440, 0.9470, 0.9543, 0.9651),
    ("LIVE", "FF", 0.8907, 0.9556, 0.9321, 0.9443, 0.9644, 0.9652, 0.9499, 0.9416, 0.9127, 0.9148, 0.9482, 0.9485),
    ("CSIQ", "AWN", 0.9363, 0.8974, 0.9471, 0.9377, 0.8460, 0.9571, 0.9262, 0.9676, 0.9663, 0.9664, 0.9561, 0.9661),
    ("CSIQ", "JPEG", 0.8882, 0.9546, 0.9622, 0.9664, 0.9395, 0.9705, 0.9654, 0.9651, 0.9483, 0.9475, 0.9593, 0.9661),
    ("CSIQ", "JP2K", 0.9363, 0.9606, 0.9691, 0.9681, 0.9262, 0.9672, 0.9685, 0.9717, 0.9503, 0.9481, 0.9588, 0.9722),
    ("CSIQ", "PGN", 0.9338, 0.8922, 0.9330, 0.9057, 0.8279, 0.9509, 0.9234, 0.9502, 0.9588, 0.9594, 0.9393, 0.9468),
    ("CSIQ", "GB", 0.9289, 0.9609, 0.9720, 0.9781, 0.9593, 0.9747, 0.9729, 0.9712, 0.9519, 0.9519, 0.9546, 0.9721),
    ("CSIQ", "Contrast", 0.8622, 0.7922, 0.9521, 0.9540, 0.5416, 0.9361, 0.9420, 0.9040, 0.9238, 0.9264, 0.9359, 0.9434),
    ("TID2013", "AWGN", 0.9291, 0.8671, 0.8645, 0.8438, 0.6611, 0.8994, 0.8973, 0.9462, 0.9251, 0.9245, 0.9109, 0.9415),
    ("TID2013", "ANMC", 0.8984, 0.7726, 0.7729, 0.7514, 0.5351, 0.8299, 0.8207, 0.8684, 0.8414, 0.8414, 0.8291, 0.8641),
    ("TID2013", "SCN", 0.9198, 0.8515, 0.8543, 0.8166, 0.6601, 0.8834, 0.8749, 0.9350, 0.9242, 0.9250, 0.8958, 0.9290),
    ("TID2013", "MN", 0.5416, 0.7767, 0.8014, 0.8063, 0.6732, 0.8642, 0.8013, 0.7075, 0.8271, 0.8298, 0.8027, 0.7670),
    ("TID2013", "HFN", 0.9141, 0.8634, 0.8603, 0.8553, 0.7405, 0.8972, 0.8983, 0.9162, 0.9001, 0.8993, 0.8940, 0.9123),
    ("TID2013", "IMN", 0.8968, 0.7503, 0.7628, 0.7281, 0.6407, 0.8536, 0.8072, 0.7637, 0.8799, 0.8763, 0.8008, 0.7392),
    ("TID2013", "QN", 0.8808, 0.8657, 0.8705, 0.8467, 0.6282, 0.7853, 0.8719, 0.9049, 0.8917, 0.8912, 0.8660, 0.9018),
    ("TID2013", "GB", 0.9149, 0.9667, 0.9672, 0.9701, 0.8906, 0.9649, 0.9550, 0.9113, 0.9694, 0.9705, 0.9665, 0.9543),
    ("TID2013", "DEN", 0.9480, 0.9254, 0.9267, 0.9152, 0.7779, 0.8910, 0.9301, 0.9525, 0.9488, 0.9478, 0.9352, 0.9483),
    ("TID2013", "JPEG", 0.9189, 0.9200, 0.9265, 0.9186, 0.8356, 0.9191, 0.9324, 0.9507, 0.9553, 0.9469, 0.9366, 0.9475),
    ("TID2013", "JP2K", 0.8840, 0.9468, 0.9504, 0.9506, 0.9077, 0.9516, 0.9576, 0.9657, 0.9614, 0.9598, 0.9603, 0.9653),
    ("TID2013", "JGTE", 0.7685, 0.8493, 0.8475, 0.8387, 0.7425, 0.8409, 0.8463, 0.8403, 0.8117, 0.8143, 0.8605, 0.8542),
    ("TID2013", "J2TE", 0.8883, 0.8828, 0.8888, 0.8656, 0.7769, 0.8760, 0.8912, 0.9136, 0.9371, 0.9344, 0.9097, 0.9176),
    ("TID2013", "NEPN", 0.6860, 0.7821, 0.7968, 0.8010, 0.5736, 0.7719, 0.7917, 0.8140, 0.7509, 0.7554, 0.8039, 0.8163),
    ("TID2013", "Block", 0.1552, 0.5720, 0.4800, 0.3716, 0.2413, 0.5306, 0.5489, 0.6625, 0.5926, 0.6148, 0.6379, 0.6581),
    ("TID2013", "Mean shift", 0.7672, 0.7752, 0.7906, 0.7833, 0.5522, 0.6275, 0.7530, 0.7351, 0.7993, 0.8009, 0.7181, 0.7144),
    ("TID2013", "Contrast", 0.4403, 0.3775, 0.4633, 0.4592, -0.180, 0.8385, 0.4686, 0.3235, 0.4654, 0.4677, 0.4856, 0.3423),
    ("TID2013", "CCS", 0.0944, -0.414, -0.410, -0.420, -0.403, -0.310, -0.275, -0.295, -0.317, -0.342, -0.383, -0.316),
    ("TID2013", "MGN", 0.8905, 0.7803, 0.7785, 0.7727, 0.6142, 0.8468, 0.8469, 0.8886, 0.8678, 0.8676, 0.8357, 0.8713),
    ("TID2013", "CN", 0.8411, 0.8566, 0.8527, 0.8761, 0.8160, 0.8946, 0.9120, 0.9298, 0.9277, 0.9245, 0.8983, 0.9210),
    ("TID2013", "LCN", 0.9145, 0.9057, 0.9067, 0.9037, 0.8180, 0.9203, 0.9466, 0.9629, 0.9339, 0.9310, 0.9405, 0.9625),
    ("TID2013", "CQD", 0.9269, 0.8542, 0.8554, 0.8401, 0.6006, 0.8414, 0.8759, 0.9102, 0.9176, 0.9062, 0.8924, 0.9104),
    ("TID2013", "Chr. abr.", 0.8873, 0.8775, 0.8784, 0.8681, 0.8209, 0.8848, 0.8714, 0.8530, 0.8872, 0.8902, 0.8837, 0.8619),
    ("TID2013", "Sampling", 0.9042, 0.9461, 0.9482, 0.9474, 0.8884, 0.9352, 0.9565, 0.9683, 0.9579, 0.9573, 0.9575, 0.9653),
]

TABLE2 = {(db, tag): dict(zip(TABLE2_METRICS, vals)) for db, tag, *vals in _TABLE2_ROWS}

#: Published top-3 counts over the rows of ``TABLE2``.
TABLE2_HIT_NUMBER = dict(zip(TABLE2_METRICS, (9, 2, 3, 6, 1, 8, 7, 18, 16, 11, 4, 20)))
