/** End-to-end UI flow over the recorded service session. */

import { beforeEach, describe, expect, it } from 'vitest';

import { App } from '../src/app.js';
import { fixture, flush, installFakeService, mountAppSkeleton } from './helpers.js';

import type { FakeService } from './helpers.js';
import type { ScoresResponse, SolutionsResponse } from '../src/types.js';

async function startApp(): Promise<{ app: App; service: FakeService }> {
  const service = installFakeService();
  mountAppSkeleton();
  const app = new App(document);
  await app.start();
  await flush();
  return { app, service };
}

function selectRankedMethod(): Promise<void> {
  const method = document.getElementById('method') as HTMLSelectElement;
  method.value = 'fuzzy_vikor';
  method.dispatchEvent(new Event('change'));
  return flush();
}

describe('evaluation app', () => {
  beforeEach(() => {
    document.body.innerHTML = '';
  });

  it('loads profiles, missions and the unranked table', async () => {
    await startApp();
    const profile = document.getElementById('profile') as HTMLSelectElement;
    expect([...profile.options].map((o) => o.value)).toContain('Balanced');
    const served = fixture<SolutionsResponse>('solutions_unranked.json');
    expect(document.querySelectorAll('#solution-table tbody tr'))
      .toHaveLength(served.solutions.length);
    expect(document.getElementById('save-decision')!.hasAttribute('disabled')).toBe(true);
  });

  it('save stays disabled until a row is selected', async () => {
    await startApp();
    const save = document.getElementById('save-decision') as HTMLButtonElement;
    expect(save.disabled).toBe(true);
    (document.querySelector('#solution-table tbody tr') as HTMLElement).click();
    expect(save.disabled).toBe(false);
    const detail = document.getElementById('detail-panel')!;
    expect(detail.textContent).toContain('Tasks to UAVs');
  });

  it('submitting the rank-1 plan round-trips into the score report', async () => {
    const { service } = await startApp();
    await selectRankedMethod();

    const ranked = fixture<SolutionsResponse>('solutions_ranked.json');
    const firstRow = document.querySelector('#solution-table tbody tr') as HTMLElement;
    expect(firstRow.dataset.plan).toBe(ranked.solutions[0]!.plan);
    firstRow.click();
    (document.getElementById('save-decision') as HTMLButtonElement).click();
    await flush();
    await flush();

    expect(service.posted).toHaveLength(1);
    expect(service.posted[0]).toMatchObject({
      operator: 'op-1',
      profile: 'Balanced',
      mission: 'mission-01',
      plan: ranked.solutions[0]!.plan,
    });

    // The score table shows exactly the served post-decision aggregate (1.0).
    const scoresFixture = fixture<ScoresResponse>('scores_after_decision.json');
    const scoreCells = document.querySelectorAll('#score-report tbody td');
    expect(scoreCells[0]!.textContent).toBe('fuzzy_vikor');
    expect(scoreCells[2]!.textContent).toBe(scoresFixture.rows[0]!.mean.toFixed(4));
    expect(scoresFixture.rows[0]!.mean).toBe(1.0);
  });

  it('advances to the next unevaluated mission after saving', async () => {
    await startApp();
    (document.querySelector('#solution-table tbody tr') as HTMLElement).click();
    (document.getElementById('save-decision') as HTMLButtonElement).click();
    await flush();
    await flush();
    const mission = document.getElementById('mission') as HTMLSelectElement;
    expect(mission.value).toBe('mission-02');
    const served = fixture<SolutionsResponse>('solutions_mission02.json');
    expect(document.querySelectorAll('#solution-table tbody tr'))
      .toHaveLength(served.solutions.length);
  });

  it('marks an already-evaluated mission as a revision', async () => {
    await startApp();
    (document.querySelector('#solution-table tbody tr') as HTMLElement).click();
    (document.getElementById('save-decision') as HTMLButtonElement).click();
    await flush();
    await flush();
    const mission = document.getElementById('mission') as HTMLSelectElement;
    mission.value = 'mission-01';
    mission.dispatchEvent(new Event('change'));
    await flush();
    expect(document.getElementById('session-status')!.textContent)
      .toContain('already evaluated');
  });

  it('shows an error banner when the service fails', async () => {
    await startApp();
    globalThis.fetch = async () =>
      new Response(JSON.stringify({ code: 'unknown_mission', message: 'no mission', detail: null }),
        { status: 404, headers: { 'Content-Type': 'application/json' } });
    const mission = document.getElementById('mission') as HTMLSelectElement;
    mission.dispatchEvent(new Event('change'));
    await flush();
    const banner = document.getElementById('error-banner')!;
    expect(banner.classList.contains('hidden')).toBe(false);
    expect(banner.textContent).toContain('unknown_mission');
  });
});
