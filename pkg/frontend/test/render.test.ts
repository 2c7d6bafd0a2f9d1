import { existsSync, mkdtempSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { describe, expect, it } from 'vitest';

import { main } from '../src/cli.js';
import { loadIndex } from '../src/data.js';
import { figureSpec, variedAxis } from '../src/figures.js';
import { buildPanels, renderFigure } from '../src/render.js';
import { niceTicks } from '../src/svg.js';

const INDEX_HEADER =
    'label,R,delta,d,Omega,r1,max_dE_B,t_at_max,max_W_ratio,settle_time,terminal_dE_B,series_path';

function syntheticSweep(omegas: number[], ds: number[] = [10]): string {
    const dir = mkdtempSync(join(tmpdir(), 'qbfig-'));
    const rows: string[] = [INDEX_HEADER];
    for (const d of ds) {
        for (const omega of omegas) {
            const name = `run_d${d}_Om${omega}.csv`;
            const lines = ['t,re_E,im_E,abs_E2,p_e_A,p_e_B,dE_B_over_w0,W_over_Wmax'];
            for (let i = 0; i <= 50; i++) {
                const t = i * 0.1;
                const v = Math.sin(t * omega) * 0.2 + 0.25;
                lines.push(`${t},1,0,1,0.5,${v},${v},0`);
            }
            writeFileSync(join(dir, name), lines.join('\n') + '\n', 'utf8');
            rows.push(`demo,5,0,${d},${omega},0.707,0.4,1,0,5,0.25,${name}`);
        }
    }
    const indexPath = join(dir, 'demo_index.csv');
    writeFileSync(indexPath, rows.join('\n') + '\n', 'utf8');
    return indexPath;
}

describe('figure layouts', () => {
    it('splits strong-coupling panels at Omega = 1', () => {
        const index = loadIndex(syntheticSweep([0.5, 1, 5, 10]));
        const spec = figureSpec('fig2', index);
        const counts = spec.panels.map((p) => index.filter(p.filter).length);
        expect(counts).toEqual([2, 2]);
    });

    it('gives fig4 one column per amplitude', () => {
        const index = loadIndex(syntheticSweep([0.5, 1], [20, 40]));
        const spec = figureSpec('fig4', index);
        expect(spec.cols).toBe(2);
        const counts = spec.panels.map((p) => index.filter(p.filter).length);
        expect(counts).toEqual([2, 2]);
    });

    it('detects the varied axis for custom figures', () => {
        const index = loadIndex(syntheticSweep([0.5, 1, 5]));
        expect(variedAxis(index)).toBe('Omega');
    });
});

describe('rendering', () => {
    it('produces an SVG with one polyline per curve', () => {
        const indexPath = syntheticSweep([0.5, 1, 5, 10]);
        const out = join(mkdtempSync(join(tmpdir(), 'qbfig-')), 'fig2.svg');
        const result = renderFigure(indexPath, 'fig2', out);
        expect(result.curveCounts).toEqual([2, 2]);
        expect(existsSync(out)).toBe(true);
        const polylines = result.svg.match(/<polyline/g) ?? [];
        expect(polylines.length).toBe(4);
        expect(result.svg).toContain('λτ');
        expect(result.svg).toContain('ΔE_B');
    });

    it('re-rendering identical CSVs yields an identical plotted data set', () => {
        const indexPath = syntheticSweep([0.5, 5]);
        const dir = mkdtempSync(join(tmpdir(), 'qbfig-'));
        const first = renderFigure(indexPath, 'fig2', join(dir, 'a.svg'));
        const second = renderFigure(indexPath, 'fig2', join(dir, 'b.svg'));
        expect(second.svg).toBe(first.svg);
    });

    it('refuses an empty index and writes no partial image', () => {
        const dir = mkdtempSync(join(tmpdir(), 'qbfig-'));
        const indexPath = join(dir, 'empty_index.csv');
        writeFileSync(indexPath, INDEX_HEADER + '\n', 'utf8');
        const out = join(dir, 'nothing.svg');
        expect(() => buildPanels(indexPath, 'fig2')).toThrow(/no runs/);
        expect(main(['render', '--index', indexPath, '--figure', 'fig2', '--out', out])).toBe(1);
        expect(existsSync(out)).toBe(false);
    });

    it('fails loudly when a series file is missing', () => {
        const dir = mkdtempSync(join(tmpdir(), 'qbfig-'));
        const indexPath = join(dir, 'dangling_index.csv');
        writeFileSync(
            indexPath,
            INDEX_HEADER + '\ndemo,5,0,10,1,0.707,0,0,0,0,0,gone.csv\n',
            'utf8'
        );
        expect(() => buildPanels(indexPath, 'fig2')).toThrow(/gone\.csv/);
    });

    it('cli validates its arguments', () => {
        expect(main([])).toBe(1);
        expect(main(['render', '--index'])).toBe(1);
        expect(main(['render', '--index', 'x.csv', '--figure', 'fig9', '--out', 'o.svg'])).toBe(1);
        expect(
            main(['render', '--index', 'x.csv', '--figure', 'custom', '--out', 'o.svg', '--y', 'nope'])
        ).toBe(1);
    });
});

describe('tick generation', () => {
    it('covers the range with a 1-2-5 ladder', () => {
        const ticks = niceTicks(0, 20);
        expect(ticks[0]).toBe(0);
        expect(ticks[ticks.length - 1]).toBeLessThanOrEqual(20);
        expect(ticks.length).toBeGreaterThanOrEqual(3);
        const steps = new Set(
            ticks.slice(1).map((t, i) => Number((t - ticks[i]).toPrecision(6)))
        );
        expect(steps.size).toBe(1);
    });

    it('handles degenerate ranges', () => {
        expect(niceTicks(1, 1).length).toBeGreaterThan(0);
    });
});
