"""Plot bias and RMSE against n from a `pflight mc` summary CSV.

    pflight mc --config docs/table1.json --out summary.csv
    python docs/plot_summary.py summary.csv rmse.png
"""

import sys

import matplotlib.pyplot as plt
import pandas as pd


def main(csv_path: str, png_path: str) -> None:
    df = pd.read_csv(csv_path)
    fig, (ax_bias, ax_rmse) = plt.subplots(1, 2, figsize=(10, 4), sharex=True)
    for (estimator, lam), cell in df.groupby(["estimator", "lambda"]):
        label = f"{estimator}, lambda={lam:g}"
        ax_bias.plot(cell["n"], cell["bias"], marker="o", label=label)
        ax_rmse.plot(cell["n"], cell["rmse"], marker="o", label=label)
    ax_bias.axhline(0.0, color="grey", linewidth=0.8)
    ax_bias.set(xlabel="n", ylabel="bias", xscale="log")
    ax_rmse.set(xlabel="n", ylabel="RMSE", xscale="log", yscale="log")
    ax_rmse.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
