"""Figure rendering for specbasis CSV outputs (fig2..fig8 analogs)."""

from .figures import FIGURE_NAMES, FigureError, FigureSpec, build_figure, render

__all__ = ["FIGURE_NAMES", "FigureError", "FigureSpec", "build_figure", "render"]
