/**
 * Strict CSV loading for the sweep harness's series and index files.
 *
 * The harness writes plain comma-separated numeric columns with a single
 * header row and no quoting, so parsing is a straight split; all the value
 * is in the error reporting, which must name the offending file and column.
 */

import { readFileSync } from 'node:fs';

export interface CsvTable {
    /** Path the table was read from (used in error messages downstream). */
    path: string;
    header: string[];
    rows: string[][];
}

export function readCsv(path: string): CsvTable {
    let text: string;
    try {
        text = readFileSync(path, 'utf8');
    } catch (err) {
        throw new Error(`cannot read CSV file '${path}': ${(err as Error).message}`);
    }
    const lines = text.split('\n').filter((line) => line.length > 0);
    if (lines.length === 0) {
        throw new Error(`CSV file '${path}' is empty`);
    }
    const header = lines[0].split(',').map((c) => c.trim());
    const rows = lines.slice(1).map((line) => line.split(','));
    for (let i = 0; i < rows.length; i++) {
        if (rows[i].length !== header.length) {
            throw new Error(
                `CSV file '${path}' row ${i + 2} has ${rows[i].length} fields, ` +
                    `expected ${header.length}`
            );
        }
    }
    return { path, header, rows };
}

/** Column accessor that fails loudly when a schema column is missing. */
export function numericColumn(table: CsvTable, name: string): number[] {
    const index = table.header.indexOf(name);
    if (index < 0) {
        throw new Error(
            `CSV file '${table.path}' is missing column '${name}' ` +
                `(found: ${table.header.join(', ')})`
        );
    }
    return table.rows.map((row, i) => {
        const value = Number(row[index]);
        if (!Number.isFinite(value)) {
            throw new Error(
                `CSV file '${table.path}' row ${i + 2} column '${name}' is not ` +
                    `a finite number: '${row[index]}'`
            );
        }
        return value;
    });
}

export function stringColumn(table: CsvTable, name: string): string[] {
    const index = table.header.indexOf(name);
    if (index < 0) {
        throw new Error(
            `CSV file '${table.path}' is missing column '${name}' ` +
                `(found: ${table.header.join(', ')})`
        );
    }
    return table.rows.map((row) => row[index]);
}
