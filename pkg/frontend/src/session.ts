/** Evaluation-session state: operator, active profile, mission progress.
 *
 * Progress is not persisted locally; it is rebuilt from the service's
 * decision log, so a session is resumable from any browser.
 */

import type { DecisionRecord, MissionInfo } from './types.js';

export interface Session {
  operator: string;
  profile: string;
  evaluated: Set<string>;
}

export function buildSession(
  operator: string,
  profile: string,
  decisions: DecisionRecord[],
): Session {
  const evaluated = new Set<string>();
  for (const d of decisions) {
    if (d.operator === operator && d.profile === profile) {
      evaluated.add(d.mission);
    }
  }
  return { operator, profile, evaluated };
}

/** First mission without a decision for this operator and profile. */
export function nextUnevaluatedMission(
  missions: MissionInfo[],
  session: Session,
  after: string | null = null,
): string | null {
  const ids = missions.map((m) => m.id);
  const start = after === null ? 0 : ids.indexOf(after) + 1;
  const rotated = [...ids.slice(start), ...ids.slice(0, start)];
  for (const id of rotated) {
    if (!session.evaluated.has(id)) {
      return id;
    }
  }
  return null;
}

export function isReevaluation(session: Session, mission: string): boolean {
  return session.evaluated.has(mission);
}
