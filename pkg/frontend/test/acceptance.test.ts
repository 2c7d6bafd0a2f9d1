/**
 * Secondary acceptance: render fig2..fig6 analogues from a fresh sweep of
 * the shipped presets, with zero data-handling errors and curve counts
 * matching the sweep grid per panel.  Exercises the real producer through
 * its CLI, consuming only the published CSV interface.
 */

import { execFileSync } from 'node:child_process';
import { existsSync, mkdtempSync, readFileSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { beforeAll, describe, expect, it } from 'vitest';

import { loadIndex } from '../src/data.js';
import { renderFigure } from '../src/render.js';

const FIGURES = ['fig2', 'fig3', 'fig4', 'fig5', 'fig6'] as const;
const workDir = mkdtempSync(join(tmpdir(), 'qbfig-accept-'));

function sweep(figure: string): string {
    const cfg = join(workDir, `${figure}.cfg`);
    const presetText = execFileSync('qbattery', ['presets', '--show', figure], {
        encoding: 'utf8',
    });
    writeFileSync(cfg, presetText, 'utf8');
    const outDir = join(workDir, `${figure}_run`);
    execFileSync('qbattery', ['sweep', '--config', cfg, '--out', outDir], {
        encoding: 'utf8',
        timeout: 600_000,
    });
    return join(outDir, `${figure}_index.csv`);
}

describe('figure pipeline against a fresh sweep', () => {
    const indexPaths: Record<string, string> = {};

    beforeAll(() => {
        for (const figure of FIGURES) {
            indexPaths[figure] = sweep(figure);
        }
    }, 600_000);

    it.each(FIGURES)('%s renders with panel curve counts matching the grid', (figure) => {
        const indexPath = indexPaths[figure];
        const rows = loadIndex(indexPath);
        const out = join(workDir, `${figure}.svg`);
        const result = renderFigure(indexPath, figure, out);
        expect(existsSync(out)).toBe(true);

        // every grid point appears exactly once per plotted quantity
        const quantities = figure === 'fig6' ? 2 : 1;
        const total = result.curveCounts.reduce((a, b) => a + b, 0);
        expect(total).toBe(rows.length * quantities);
        // and each panel's curve count matches the rows routed to it
        for (const panel of result.panels) {
            expect(panel.curves.length).toBeGreaterThan(0);
            const polylines =
                readFileSync(out, 'utf8').match(/<polyline/g)?.length ?? 0;
            expect(polylines).toBe(total);
        }
    });
});
