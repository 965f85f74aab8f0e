"""Synthetic CSV fixtures."""

import csv

import numpy as np

SMALL_ROWS = [
    ["id", "size", "shape", "grade", "label"],
    ["a1", "1", "2", "low", "pos"],
    ["a2", "2", "1", "low", "pos"],
    ["a3", "1", "1", "high", "pos"],
    ["a4", "2", "3", "low", "pos"],
    ["a5", "8", "9", "high", "neg"],
    ["a6", "9", "7", "high", "neg"],
    ["a7", "?", "8", "high", "neg"],
    ["a8", "7", "8", "low", "neg"],
    ["a9", "9", "9", "high", "neg"],
]


def write_small_csv(path):
    """Nine rows, one with a missing marker; two classes of four after the drop."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        csv.writer(fh).writerows(SMALL_ROWS)
    return path


TCGA_GENES = [
    "IDH1", "TP53", "ATRX", "PTEN", "EGFR", "CIC", "MUC16", "PIK3CA", "NF1", "PIK3R1",
    "FUBP1", "RB1", "NOTCH1", "BCOR", "CSMD3", "SMARCA4", "GRIN2A", "IDH2", "FAT4", "PDGFRA",
]


def write_tcga_like_csv(path, seed=0):
    """862 patients, 23 features (age plus 22 categorical), 23 rows with a missing cell.

    After dropping incomplete rows 839 remain with a 487/352 LGG/HGG split.
    """
    rng = np.random.default_rng(seed)
    n_complete, n_missing = 839, 23
    grades = np.array(["LGG"] * 487 + ["HGG"] * 352)
    rng.shuffle(grades)
    grades = np.r_[grades, rng.choice(["LGG", "HGG"], n_missing)]
    hgg = grades == "HGG"
    n = grades.size

    age = np.where(hgg, rng.normal(60, 11, n), rng.normal(42, 12, n)).clip(14, 89).round().astype(int)
    gender = rng.choice(["Male", "Female"], n)
    race = rng.choice(["white", "black or african american", "asian", "not reported"], n,
                      p=[0.85, 0.07, 0.05, 0.03])
    rates_lgg = np.linspace(0.75, 0.02, len(TCGA_GENES))
    rates_hgg = np.linspace(0.05, 0.08, len(TCGA_GENES))
    rates_hgg[4] = 0.35  # EGFR
    mutated = np.where(hgg[:, None], rng.uniform(size=(n, 20)) < rates_hgg,
                       rng.uniform(size=(n, 20)) < rates_lgg)

    header = ["Grade", "Gender", "Age_at_diagnosis", "Race"] + TCGA_GENES
    rows = []
    for i in range(n):
        row = [grades[i], gender[i], str(age[i]), race[i]]
        row += ["MUTATED" if m else "NOT_MUTATED" for m in mutated[i]]
        if i >= n_complete:
            row[int(rng.choice([1, 2, 3]))] = rng.choice(["?", ""])
        rows.append(row)
    order = rng.permutation(n)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows[k] for k in order)
    return path


TCGA_CATEGORICAL = ["Gender", "Race"] + TCGA_GENES
