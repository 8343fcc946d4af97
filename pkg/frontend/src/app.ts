/** Evaluation workflow wiring: profile selection, shaded solution table,
 * decision capture, and the score report. */

import {
  ServiceError,
  getCriteria,
  getDecisions,
  getMethods,
  getMissions,
  getProfiles,
  getScores,
  getSolutions,
  postDecision,
} from './api.js';
import { renderDetail } from './detail.js';
import { buildSession, isReevaluation, nextUnevaluatedMission, type Session } from './session.js';
import { renderMissionTable } from './table.js';
import type { CriterionMeta, MissionInfo, SolutionRow } from './types.js';

interface Elements {
  operator: HTMLInputElement;
  profile: HTMLSelectElement;
  mission: HTMLSelectElement;
  method: HTMLSelectElement;
  filtered: HTMLInputElement;
  table: HTMLElement;
  detail: HTMLElement;
  save: HTMLButtonElement;
  status: HTMLElement;
  error: HTMLElement;
  scores: HTMLElement;
}

export class App {
  private readonly el: Elements;
  private criteria: CriterionMeta[] = [];
  private missions: MissionInfo[] = [];
  private session: Session | null = null;
  private selected: SolutionRow | null = null;
  private submitting = false;

  constructor(root: Document) {
    const byId = <T extends HTMLElement>(id: string): T => {
      const node = root.getElementById(id);
      if (node === null) throw new Error(`missing #${id}`);
      return node as T;
    };
    this.el = {
      operator: byId<HTMLInputElement>('operator'),
      profile: byId<HTMLSelectElement>('profile'),
      mission: byId<HTMLSelectElement>('mission'),
      method: byId<HTMLSelectElement>('method'),
      filtered: byId<HTMLInputElement>('filtered'),
      table: byId('solution-table'),
      detail: byId('detail-panel'),
      save: byId<HTMLButtonElement>('save-decision'),
      status: byId('session-status'),
      error: byId('error-banner'),
      scores: byId('score-report'),
    };
  }

  async start(): Promise<void> {
    try {
      const [criteria, profiles, methods, missions] = await Promise.all([
        getCriteria(), getProfiles(), getMethods(), getMissions(),
      ]);
      this.criteria = criteria.criteria;
      this.missions = missions.missions;
      this.fillSelect(this.el.profile, profiles.profiles.map((p) => p.name));
      this.fillSelect(this.el.method, ['(unranked)', ...methods.methods]);
      this.fillSelect(this.el.mission, this.missions.map((m) => m.id));
    } catch (err) {
      this.showError(err);
      return;
    }
    this.el.profile.addEventListener('change', () => void this.restartSession());
    this.el.operator.addEventListener('change', () => void this.restartSession());
    this.el.mission.addEventListener('change', () => void this.loadMission());
    this.el.method.addEventListener('change', () => void this.loadMission());
    this.el.filtered.addEventListener('change', () => void this.loadMission());
    this.el.save.addEventListener('click', () => void this.saveDecision());
    this.el.save.disabled = true;
    await this.restartSession();
  }

  private fillSelect(select: HTMLSelectElement, options: string[]): void {
    select.textContent = '';
    for (const name of options) {
      const option = document.createElement('option');
      option.value = name;
      option.textContent = name;
      select.appendChild(option);
    }
  }

  private showError(err: unknown): void {
    const text = err instanceof ServiceError
      ? `${err.code}: ${err.message}`
      : `service unreachable: ${String(err)}`;
    this.el.error.textContent = text;
    this.el.error.classList.remove('hidden');
  }

  private clearError(): void {
    this.el.error.textContent = '';
    this.el.error.classList.add('hidden');
  }

  async restartSession(): Promise<void> {
    this.clearError();
    const operator = this.el.operator.value.trim() || 'anonymous';
    const profile = this.el.profile.value;
    try {
      const log = await getDecisions(operator, profile);
      this.session = buildSession(operator, profile, log.decisions);
    } catch (err) {
      this.showError(err);
      return;
    }
    const next = nextUnevaluatedMission(this.missions, this.session);
    if (next !== null) {
      this.el.mission.value = next;
    }
    await this.loadMission();
  }

  async loadMission(): Promise<void> {
    this.clearError();
    this.selected = null;
    this.el.save.disabled = true;
    renderDetail(this.el.detail, null);
    const mission = this.el.mission.value;
    const method = this.el.method.value === '(unranked)' ? undefined : this.el.method.value;
    try {
      const response = await getSolutions(mission, {
        profile: this.el.profile.value,
        method,
        filtered: this.el.filtered.checked,
      });
      renderMissionTable(this.el.table, response, this.criteria, {
        onSelect: (row) => this.select(row),
      });
      await this.refreshScores();
    } catch (err) {
      this.showError(err);
      return;
    }
    this.updateStatus();
  }

  private select(row: SolutionRow): void {
    this.selected = row;
    this.el.save.disabled = false;
    renderDetail(this.el.detail, row);
    for (const tr of this.el.table.querySelectorAll('tr[data-plan]')) {
      tr.classList.toggle('selected', (tr as HTMLElement).dataset.plan === row.plan);
    }
  }

  private updateStatus(): void {
    if (this.session === null) return;
    const mission = this.el.mission.value;
    const done = this.session.evaluated.size;
    const revisit = isReevaluation(this.session, mission)
      ? ' (already evaluated; saving revises the decision)' : '';
    this.el.status.textContent =
      `${this.session.operator} / ${this.session.profile}: ` +
      `${done} of ${this.missions.length} missions evaluated${revisit}`;
  }

  async saveDecision(): Promise<void> {
    if (this.selected === null || this.session === null || this.submitting) {
      return;
    }
    this.submitting = true;
    this.el.save.disabled = true;
    const mission = this.el.mission.value;
    try {
      await postDecision({
        operator: this.session.operator,
        profile: this.session.profile,
        mission,
        plan: this.selected.plan,
      });
    } catch (err) {
      this.showError(err);
      this.el.save.disabled = false;
      this.submitting = false;
      return;
    }
    this.session.evaluated.add(mission);
    this.submitting = false;
    const next = nextUnevaluatedMission(this.missions, this.session, mission);
    if (next !== null) {
      this.el.mission.value = next;
    }
    await this.loadMission();
  }

  async refreshScores(): Promise<void> {
    const scores = await getScores('method');
    this.el.scores.textContent = '';
    if (scores.rows.length === 0) {
      const hint = document.createElement('p');
      hint.className = 'hint';
      hint.textContent = 'No decisions recorded yet.';
      this.el.scores.appendChild(hint);
      return;
    }
    const table = document.createElement('table');
    table.className = 'scores';
    const head = table.createTHead().insertRow();
    for (const text of ['Method', 'Decisions', 'Mean', 'Median', 'SD']) {
      const th = document.createElement('th');
      th.textContent = text;
      head.appendChild(th);
    }
    const body = table.createTBody();
    for (const row of scores.rows) {
      const tr = body.insertRow();
      tr.insertCell().textContent = row.method ?? '';
      tr.insertCell().textContent = String(row.count);
      tr.insertCell().textContent = row.mean.toFixed(4);
      tr.insertCell().textContent = row.median.toFixed(4);
      tr.insertCell().textContent = row.sd.toFixed(4);
    }
    this.el.scores.appendChild(table);
  }
}
