/**
 * Figure layouts: which index rows land on which panel, what each panel
 * plots, and how curves are labeled.
 *
 * The standard layouts mirror the reference parameter studies: strong
 * coupling split into slow/fast drive panels, the two-amplitude study as
 * one column per amplitude, and the weak-coupling study as a 2x2 grid of
 * energy and work rows.
 */

import { IndexRow, Quantity } from './data.js';

export type FigureId = 'fig2' | 'fig3' | 'fig4' | 'fig5' | 'fig6' | 'custom';

export interface PanelSpec {
    title: string;
    quantity: Quantity;
    /** Which sweep rows belong on this panel. */
    filter: (row: IndexRow) => boolean;
    /** Legend label for one curve. */
    curveLabel: (row: IndexRow) => string;
    /** Grid position. */
    row: number;
    col: number;
}

export interface FigureSpec {
    id: FigureId;
    rows: number;
    cols: number;
    panels: PanelSpec[];
}

const omegaLabel = (row: IndexRow) => `Ω=${row.Omega}`;

function strongCouplingPair(id: FigureId, quantity: Quantity): FigureSpec {
    return {
        id,
        rows: 1,
        cols: 2,
        panels: [
            {
                title: '(a) slow drive, Ω ≤ 1',
                quantity,
                filter: (r) => r.Omega <= 1,
                curveLabel: omegaLabel,
                row: 0,
                col: 0,
            },
            {
                title: '(b) fast drive, Ω > 1',
                quantity,
                filter: (r) => r.Omega > 1,
                curveLabel: omegaLabel,
                row: 0,
                col: 1,
            },
        ],
    };
}

function amplitudeColumns(id: FigureId, quantity: Quantity, dValues: number[]): FigureSpec {
    const roman = ['I', 'II', 'III', 'IV'];
    return {
        id,
        rows: 1,
        cols: dValues.length,
        panels: dValues.map((d, i) => ({
            title: `(${roman[i] ?? i + 1}) d = ${d}`,
            quantity,
            filter: (r) => r.d === d,
            curveLabel: omegaLabel,
            row: 0,
            col: i,
        })),
    };
}

function weakCouplingGrid(id: FigureId, split: number): FigureSpec {
    const quantities: Quantity[] = ['dE_B_over_w0', 'W_over_Wmax'];
    const panels: PanelSpec[] = [];
    const tags = ['a', 'b', 'c', 'd'];
    quantities.forEach((quantity, rowIndex) => {
        [
            { title: `Ω ≤ ${split}`, filter: (r: IndexRow) => r.Omega <= split, col: 0 },
            { title: `Ω > ${split}`, filter: (r: IndexRow) => r.Omega > split, col: 1 },
        ].forEach((half, colIndex) => {
            panels.push({
                title: `(${tags[rowIndex * 2 + colIndex]}) ${half.title}`,
                quantity,
                filter: half.filter,
                curveLabel: omegaLabel,
                row: rowIndex,
                col: half.col,
            });
        });
    });
    return { id, rows: 2, cols: 2, panels };
}

/**
 * Build the layout for one figure from the rows actually present in the
 * index.  For 'custom' the varied axis is detected and every row lands on
 * a single panel of the requested quantity.
 */
export function figureSpec(
    id: FigureId,
    rows: IndexRow[],
    customQuantity: Quantity = 'dE_B_over_w0'
): FigureSpec {
    switch (id) {
        case 'fig2':
            return strongCouplingPair('fig2', 'dE_B_over_w0');
        case 'fig3':
            return strongCouplingPair('fig3', 'W_over_Wmax');
        case 'fig4':
            return amplitudeColumns('fig4', 'dE_B_over_w0', distinct(rows.map((r) => r.d)));
        case 'fig5':
            return amplitudeColumns('fig5', 'W_over_Wmax', distinct(rows.map((r) => r.d)));
        case 'fig6':
            return weakCouplingGrid('fig6', 0.05);
        case 'custom': {
            const axis = variedAxis(rows);
            return {
                id,
                rows: 1,
                cols: 1,
                panels: [
                    {
                        title: `varying ${axis}`,
                        quantity: customQuantity,
                        filter: () => true,
                        curveLabel: (r) => `${axis}=${r[axis]}`,
                        row: 0,
                        col: 0,
                    },
                ],
            };
        }
    }
}

function distinct(values: number[]): number[] {
    return [...new Set(values)].sort((a, b) => a - b);
}

type Axis = 'R' | 'delta' | 'd' | 'Omega';

/** The sweep axis with the most distinct values (Omega wins ties). */
export function variedAxis(rows: IndexRow[]): Axis {
    const axes: Axis[] = ['Omega', 'd', 'R', 'delta'];
    let best: Axis = 'Omega';
    let bestCount = 0;
    for (const axis of axes) {
        const count = new Set(rows.map((r) => r[axis])).size;
        if (count > bestCount) {
            best = axis;
            bestCount = count;
        }
    }
    return best;
}
