# -*- coding: utf-8 -*-
from typing import Optional

import matplotlib.pyplot as plt
import numpy as np

from ..models import Clustering, FrequencyGrid


def _create_image_in_plt(grid: FrequencyGrid, clustering: Optional[Clustering] = None) -> plt.Figure:
    names = [concept.name for concept in grid.concepts]
    size = max(grid.size, 1)

    fig, ax = plt.subplots(figsize=(1 + 0.6 * size, 1 + 0.6 * size))
    ax.title.set_text("Frequency grid")

    cells = np.ma.masked_where(np.eye(grid.size, dtype=bool), grid.counts)
    ax.imshow(cells, cmap='Blues', vmin=0)

    ax.set_xticks(range(grid.size))
    ax.set_xticklabels(names, rotation=45, ha='right')
    ax.set_yticks(range(grid.size))
    ax.set_yticklabels(names)

    top = grid.counts.max() if grid.size else 0
    for i in range(grid.size):
        for j in range(grid.size):
            if i == j:
                continue
            value = int(grid.counts[i, j])
            ax.text(j, i, str(value), ha='center', va='center', color='white' if value > top / 2 else 'black')

    if clustering is not None:
        for cluster in clustering.clusters:
            positions = [grid.index(concept) for concept in cluster]
            if len(positions) < 2:
                continue
            for i in positions:
                for j in positions:
                    if i != j:
                        ax.add_patch(plt.Rectangle((j - 0.5, i - 0.5), 1, 1, fill=False, edgecolor='tab:red'))

    return fig


def save_image_from_grid(grid: FrequencyGrid, output_image_path: str, clustering: Optional[Clustering] = None) -> None:
    """
    Renders the frequency grid as a heat map with the counts written into the cells and saves it under a given path.
    :param grid: Frequency grid.
    :param output_image_path: Path to save the resulting image to.
    :param clustering: When given, cells inside a primary cluster are outlined.
    :return: None
    """
    fig = _create_image_in_plt(grid, clustering)
    fig.savefig(output_image_path, bbox_inches='tight')
    plt.close(fig)


def show_image_from_grid(grid: FrequencyGrid, clustering: Optional[Clustering] = None) -> None:
    """
    Renders the frequency grid as a heat map and shows it using plt.show().
    :param grid: Frequency grid.
    :param clustering: When given, cells inside a primary cluster are outlined.
    :return: None
    """
    _create_image_in_plt(grid, clustering)
    return plt.show()
