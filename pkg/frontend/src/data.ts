/**
 * Typed views over the sweep harness's published CSV schemas.
 */

import { dirname, isAbsolute, join } from 'node:path';
import { numericColumn, readCsv, stringColumn } from './csv.js';

/** Quantities a figure can plot, by series-CSV column name. */
export type Quantity = 'dE_B_over_w0' | 'W_over_Wmax';

export const QUANTITY_LABELS: Record<Quantity, string> = {
    dE_B_over_w0: 'ΔE_B/ω₀',
    W_over_Wmax: 'W/W_max',
};

export interface IndexRow {
    label: string;
    R: number;
    delta: number;
    d: number;
    Omega: number;
    r1: number;
    seriesPath: string;
}

export interface Series {
    t: number[];
    values: Record<Quantity, number[]>;
}

const INDEX_COLUMNS = ['label', 'R', 'delta', 'd', 'Omega', 'r1', 'series_path'];

/** Load the sweep index; series paths resolve relative to the index file. */
export function loadIndex(indexPath: string): IndexRow[] {
    const table = readCsv(indexPath);
    for (const column of INDEX_COLUMNS) {
        if (!table.header.includes(column)) {
            throw new Error(
                `CSV file '${indexPath}' is missing column '${column}' ` +
                    `(found: ${table.header.join(', ')})`
            );
        }
    }
    const labels = stringColumn(table, 'label');
    const rs = numericColumn(table, 'R');
    const deltas = numericColumn(table, 'delta');
    const ds = numericColumn(table, 'd');
    const omegas = numericColumn(table, 'Omega');
    const r1s = numericColumn(table, 'r1');
    const paths = stringColumn(table, 'series_path');
    const root = dirname(indexPath);
    return labels.map((label, i) => ({
        label,
        R: rs[i],
        delta: deltas[i],
        d: ds[i],
        Omega: omegas[i],
        r1: r1s[i],
        seriesPath: isAbsolute(paths[i]) ? paths[i] : join(root, paths[i]),
    }));
}

export function loadSeries(seriesPath: string): Series {
    const table = readCsv(seriesPath);
    return {
        t: numericColumn(table, 't'),
        values: {
            dE_B_over_w0: numericColumn(table, 'dE_B_over_w0'),
            W_over_Wmax: numericColumn(table, 'W_over_Wmax'),
        },
    };
}
