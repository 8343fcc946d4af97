/** Fixture-backed fetch mock and DOM mounting for the contract tests.
 *
 * Every response replayed here was recorded from the real service by
 * record_fixtures.py; the tests never fabricate numbers.
 */

import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

const here = dirname(fileURLToPath(import.meta.url));

export function fixture<T = unknown>(name: string): T {
  return JSON.parse(readFileSync(join(here, 'fixtures', name), 'utf-8')) as T;
}

export interface FakeService {
  posted: unknown[];
  calls: string[];
}

/** Install a fetch stub that replays the recorded session: scores are empty
 * until a decision is posted, then match the recorded post-decision state. */
export function installFakeService(): FakeService {
  const state: FakeService = { posted: [], calls: [] };
  const respond = (body: unknown, status = 200) =>
    new Response(JSON.stringify(body), {
      status,
      headers: { 'Content-Type': 'application/json' },
    });

  globalThis.fetch = async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = typeof input === 'string' ? input : input instanceof URL ? input.href : input.url;
    state.calls.push(url);
    const [path, query] = url.split('?', 2);
    const params = new URLSearchParams(query ?? '');
    switch (path) {
      case '/api/v1/criteria':
        return respond(fixture('criteria.json'));
      case '/api/v1/profiles':
        return respond(fixture('profiles.json'));
      case '/api/v1/methods':
        return respond(fixture('methods.json'));
      case '/api/v1/missions':
        return respond(fixture('missions.json'));
      case '/api/v1/missions/mission-01/solutions':
        return respond(params.get('method') === 'fuzzy_vikor'
          ? fixture('solutions_ranked.json')
          : fixture('solutions_unranked.json'));
      case '/api/v1/missions/mission-02/solutions':
        return respond(fixture('solutions_mission02.json'));
      case '/api/v1/decisions':
        if (init?.method === 'POST') {
          state.posted.push(JSON.parse(String(init.body)));
          return respond(fixture('decision_post.json'), 201);
        }
        return respond(state.posted.length === 0
          ? { decisions: [] }
          : fixture('decisions.json'));
      case '/api/v1/scores':
        return respond(state.posted.length === 0
          ? { group_by: ['method'], rows: [], n_decisions: 0 }
          : fixture('scores_after_decision.json'));
      default:
        return respond({ code: 'unknown_route', message: `no fixture for ${url}`, detail: null }, 404);
    }
  };
  return state;
}

/** Mount the real index.html markup (minus the module script) into jsdom. */
export function mountAppSkeleton(): void {
  const html = readFileSync(join(here, '..', 'index.html'), 'utf-8');
  const body = html.slice(html.indexOf('<body>') + 6, html.indexOf('</body>'));
  document.body.innerHTML = body.replace(/<script[^>]*><\/script>/, '');
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
