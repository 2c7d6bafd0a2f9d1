#!/usr/bin/env node
/**
 * Figure-pipeline CLI.
 *
 *   render --index <csv> --figure <fig2|fig3|fig4|fig5|fig6|custom>
 *          --out <path> [--y <dE_B_over_w0|W_over_Wmax>]
 *
 * Exit codes: 0 success, 1 usage or data error.
 */

import { Quantity } from './data.js';
import { FigureId } from './figures.js';
import { renderFigure } from './render.js';

const FIGURES: FigureId[] = ['fig2', 'fig3', 'fig4', 'fig5', 'fig6', 'custom'];
const QUANTITIES: Quantity[] = ['dE_B_over_w0', 'W_over_Wmax'];

function usage(): string {
    return (
        'usage: qbattery-render render --index <csv> ' +
        '--figure <fig2|fig3|fig4|fig5|fig6|custom> --out <path> ' +
        '[--y <dE_B_over_w0|W_over_Wmax>]'
    );
}

export function main(argv: string[]): number {
    if (argv.length === 0 || argv[0] !== 'render') {
        console.error(usage());
        return 1;
    }
    const options = new Map<string, string>();
    for (let i = 1; i < argv.length; i += 2) {
        const flag = argv[i];
        const value = argv[i + 1];
        if (!flag.startsWith('--') || value === undefined) {
            console.error(usage());
            return 1;
        }
        options.set(flag.slice(2), value);
    }
    const index = options.get('index');
    const figure = options.get('figure') as FigureId | undefined;
    const out = options.get('out');
    const quantity = (options.get('y') ?? 'dE_B_over_w0') as Quantity;
    if (!index || !figure || !out) {
        console.error(usage());
        return 1;
    }
    if (!FIGURES.includes(figure)) {
        console.error(`unknown figure '${figure}'; expected one of ${FIGURES.join(', ')}`);
        return 1;
    }
    if (!QUANTITIES.includes(quantity)) {
        console.error(`unknown quantity '${quantity}'; expected ${QUANTITIES.join(' or ')}`);
        return 1;
    }
    try {
        const result = renderFigure(index, figure, out, quantity);
        console.log(
            `wrote ${result.outPath} (${result.curveCounts.length} panels, ` +
                `${result.curveCounts.join('+')} curves)`
        );
        return 0;
    } catch (err) {
        console.error((err as Error).message);
        return 1;
    }
}

import { pathToFileURL } from 'node:url';

if (process.argv[1] !== undefined && import.meta.url === pathToFileURL(process.argv[1]).href) {
    process.exit(main(process.argv.slice(2)));
}
