"""gnuplot scripts that render the emitted CSV files."""

from __future__ import annotations

_PREAMBLE = """set datafile separator ','
set datafile commentschars '#'
set key top right
set terminal pngcairo size 900,600
"""


class GnuplotScripts:
    """Builds script text; rendering is left to the user (gnuplot script.gp)."""

    def pulse(self, csv_name: str, x_star: float) -> str:
        return (
            _PREAMBLE
            + "set output 'pulse.png'\n"
            + "set xlabel 'x'\n"
            + f"set arrow from {x_star:.17g}, graph 0 to {x_star:.17g}, graph 1 nohead dt 3\n"
            + f"set arrow from {-x_star:.17g}, graph 0 to {-x_star:.17g}, graph 1 nohead dt 3\n"
            + f"plot '{csv_name}' using 1:2 with lines title 'u', \\\n"
            + "     '' using 1:3 with lines title 'v', \\\n"
            + "     '' using 1:4 with lines title 'w'\n"
        )

    def diagram(self, drift_csv: str, hopf_csv: str, codim2_csv: str, regions_csv: str | None) -> str:
        lines = [
            _PREAMBLE,
            "set output 'diagram.png'\n",
            "set xlabel 'tau_hat'\nset ylabel 'theta_hat'\n",
        ]
        plots = []
        if regions_csv:
            plots.append(f"'{regions_csv}' using 1:2:3 with points pt 5 ps 0.4 lc variable title 'region'")
        plots.append(f"'{drift_csv}' using 1:2 with lines lw 2 title 'drift'")
        plots.append(f"'{hopf_csv}' using 5:6 with lines dt 2 lw 2 title 'Hopf'")
        plots.append(f"'{codim2_csv}' using 2:3 with points pt 7 ps 2 title 'codim-2'")
        lines.append("plot " + ", \\\n     ".join(plots) + "\n")
        return "".join(lines)

    def trace(self, csv_name: str) -> str:
        return (
            _PREAMBLE
            + "set output 'trace.png'\n"
            + "set xlabel 'Re lambda_hat'\nset ylabel 'Im lambda_hat'\n"
            + "set xzeroaxis\nset yzeroaxis\n"
            + f"plot '{csv_name}' using 2:3 with points pt 7 ps 0.5 title 'lambda', \\\n"
            + "     '' using 2:4 with points pt 7 ps 0.5 title 'conjugate'\n"
        )

    def simulate(self, csv_name: str, title: str) -> str:
        return (
            _PREAMBLE
            + "set output 'contour.png'\n"
            + f"set title '{title}'\n"
            + "set xlabel 't'\nset ylabel 'x'\n"
            + f"plot '{csv_name}' using 1:2 with lines title 'x_-', \\\n"
            + "     '' using 1:3 with lines title 'x_+'\n"
        )

    def spectrum(self, csv_name: str) -> str:
        return (
            _PREAMBLE
            + "set output 'dispersion.png'\n"
            + "set xlabel 'xi'\nset ylabel 'Re lambda'\n"
            + f"plot '{csv_name}' using 1:2 with lines title 'root 1', \\\n"
            + "     '' using 1:3 with lines title 'root 2', \\\n"
            + "     '' using 1:4 with lines title 'root 3'\n"
        )
