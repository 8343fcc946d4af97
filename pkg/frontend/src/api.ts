/** Thin typed client for the decision-support service.
 *
 * The UI never computes ranking or scoring values itself; everything shown
 * comes out of these responses.
 */

import type {
  ApiErrorBody,
  CriterionMeta,
  DecisionRecord,
  MissionInfo,
  ProfileInfo,
  ScoresResponse,
  SolutionsResponse,
} from './types.js';

const BASE = '/api/v1';

export class ServiceError extends Error {
  readonly code: string;
  readonly status: number;
  readonly detail: unknown;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.code = body.code;
    this.detail = body.detail;
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(`${BASE}${path}`, init);
  if (!response.ok) {
    let body: ApiErrorBody;
    try {
      body = (await response.json()) as ApiErrorBody;
    } catch {
      body = { code: 'unreachable', message: `service error ${response.status}`, detail: null };
    }
    throw new ServiceError(response.status, body);
  }
  return (await response.json()) as T;
}

export function getCriteria(): Promise<{ criteria: CriterionMeta[] }> {
  return request('/criteria');
}

export function getProfiles(): Promise<{ profiles: ProfileInfo[] }> {
  return request('/profiles');
}

export function getMethods(): Promise<{ methods: string[] }> {
  return request('/methods');
}

export function getMissions(): Promise<{ missions: MissionInfo[] }> {
  return request('/missions');
}

export function getSolutions(
  mission: string,
  options: { profile?: string; method?: string; filtered?: boolean } = {},
): Promise<SolutionsResponse> {
  const params = new URLSearchParams();
  if (options.profile) params.set('profile', options.profile);
  if (options.method) params.set('method', options.method);
  if (options.filtered) params.set('filtered', 'true');
  const qs = params.toString();
  return request(`/missions/${encodeURIComponent(mission)}/solutions${qs ? `?${qs}` : ''}`);
}

export function getDecisions(operator?: string, profile?: string):
    Promise<{ decisions: DecisionRecord[] }> {
  const params = new URLSearchParams();
  if (operator) params.set('operator', operator);
  if (profile) params.set('profile', profile);
  const qs = params.toString();
  return request(`/decisions${qs ? `?${qs}` : ''}`);
}

export function postDecision(decision: {
  operator: string;
  profile: string;
  mission: string;
  plan: string;
}): Promise<{ accepted: boolean; decision: DecisionRecord }> {
  return request('/decisions', {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(decision),
  });
}

export function getScores(groupBy = 'method', method?: string): Promise<ScoresResponse> {
  const params = new URLSearchParams({ group_by: groupBy });
  if (method) params.set('method', method);
  return request(`/scores?${params.toString()}`);
}
