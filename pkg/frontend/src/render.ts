/**
 * Figure assembly: index rows -> panels -> SVG file.
 *
 * Fails before writing anything if the index is empty or any series file
 * is missing or malformed, so a broken sweep never leaves a partial image.
 */

import { writeFileSync } from 'node:fs';
import { QUANTITY_LABELS, Quantity, loadIndex, loadSeries } from './data.js';
import { FigureId, figureSpec } from './figures.js';
import { Panel, renderSvg } from './svg.js';

export interface RenderResult {
    outPath: string;
    /** Curves per panel, in panel order (used by the acceptance checks). */
    curveCounts: number[];
    panels: Panel[];
    svg: string;
}

export function buildPanels(
    indexPath: string,
    figure: FigureId,
    customQuantity: Quantity = 'dE_B_over_w0'
): { panels: Panel[]; rows: number; cols: number } {
    const index = loadIndex(indexPath);
    if (index.length === 0) {
        throw new Error(`index '${indexPath}' contains no runs; nothing to render`);
    }
    const spec = figureSpec(figure, index, customQuantity);
    const seriesCache = new Map<string, ReturnType<typeof loadSeries>>();
    const panels: Panel[] = spec.panels.map((panelSpec) => {
        const rows = index.filter(panelSpec.filter);
        const curves = rows.map((row) => {
            let series = seriesCache.get(row.seriesPath);
            if (!series) {
                series = loadSeries(row.seriesPath);
                seriesCache.set(row.seriesPath, series);
            }
            return {
                label: panelSpec.curveLabel(row),
                x: series.t,
                y: series.values[panelSpec.quantity],
            };
        });
        return {
            title: panelSpec.title,
            xLabel: 'λτ',
            yLabel: QUANTITY_LABELS[panelSpec.quantity],
            curves,
            row: panelSpec.row,
            col: panelSpec.col,
        };
    });
    return { panels, rows: spec.rows, cols: spec.cols };
}

export function renderFigure(
    indexPath: string,
    figure: FigureId,
    outPath: string,
    customQuantity: Quantity = 'dE_B_over_w0'
): RenderResult {
    const { panels, rows, cols } = buildPanels(indexPath, figure, customQuantity);
    const svg = renderSvg(panels, rows, cols);
    writeFileSync(outPath, svg, 'utf8');
    return {
        outPath,
        curveCounts: panels.map((p) => p.curves.length),
        panels,
        svg,
    };
}
