#!/usr/bin/env python3
"""Generate the embedding fixture (emb_mini.jsonl) and its expectations.

Vector components are rounded to 6 decimals before writing so the JSONL
holds exact doubles; expectations (centroids, cosine, PCA variances) are
computed with numpy on the same rounded values.
"""

import hashlib
import json
import os
import random

import numpy as np

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")
DIM = 6


def main():
    rng = random.Random(424242)
    entries = []
    for i in range(20):
        group = "en" if i < 10 else "zh"
        order = "svo_time" if i < 10 else "time_svo"
        base = 0.3 if group == "en" else -0.3
        vec = [round(base + rng.uniform(-1, 1), 6) for _ in range(DIM)]
        entries.append({"id": f"e{i:02d}", "tags": [group, order], "vec": vec})

    path = os.path.join(FIXTURES, "emb_mini.jsonl")
    with open(path, "w", encoding="utf-8") as fh:
        for e in entries:
            fh.write(json.dumps(e, sort_keys=True) + "\n")

    with open(path, "rb") as fh:
        digest = hashlib.sha256(fh.read()).hexdigest()

    mat = np.array([e["vec"] for e in entries], dtype=np.float64)
    zh = mat[10:]
    en = mat[:10]
    cen_zh = zh.mean(axis=0)
    cen_en = en.mean(axis=0)
    cos = float(np.dot(cen_en, cen_zh) / (np.linalg.norm(cen_en) * np.linalg.norm(cen_zh)))

    centered = mat - mat.mean(axis=0)
    cov = centered.T @ centered / (mat.shape[0] - 1)
    eigvals = np.sort(np.linalg.eigvalsh(cov))[::-1]

    expected = {
        "sha256": digest,
        "dim": DIM,
        "count": len(entries),
        "centroid_zh": [float(v) for v in cen_zh],
        "centroid_en": [float(v) for v in cen_en],
        "cosine_en_zh": cos,
        "pca_variances": [float(v) for v in eigvals[:4]],
    }
    out = os.path.join(FIXTURES, "emb_mini.expected.json")
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(expected, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print("wrote", path, "and", out)
    print("cosine(en,zh) =", cos)
    print("top variances =", expected["pca_variances"])


if __name__ == "__main__":
    main()
