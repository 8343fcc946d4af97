/** Solution table: one row per plan, one shaded cell per criterion. */

import { barMarkup } from './bars.js';
import type { CriterionMeta, SolutionRow, SolutionsResponse } from './types.js';

export interface TableCallbacks {
  onSelect: (row: SolutionRow) => void;
}

function formatValue(value: number): string {
  return Number.isInteger(value) ? String(value) : value.toFixed(4);
}

export function renderMissionTable(
  container: HTMLElement,
  response: SolutionsResponse,
  criteria: CriterionMeta[],
  callbacks: TableCallbacks,
  selectedPlan: string | null = null,
): void {
  container.textContent = '';
  const table = document.createElement('table');
  table.className = 'solutions';

  const head = table.createTHead().insertRow();
  const ranked = response.method !== null;
  const leading = ranked ? ['Rank', 'Plan', 'Score'] : ['Plan'];
  for (const text of leading) {
    const th = document.createElement('th');
    th.textContent = text;
    head.appendChild(th);
  }
  for (const crit of criteria) {
    const th = document.createElement('th');
    th.textContent = crit.unit ? `${crit.label} (${crit.unit})` : crit.label;
    head.appendChild(th);
  }

  const body = table.createTBody();
  for (const row of response.solutions) {
    const tr = body.insertRow();
    tr.dataset.plan = row.plan;
    tr.className = row.plan === selectedPlan ? 'selected' : '';
    if (ranked) {
      tr.insertCell().textContent = String(row.rank ?? '');
      const planCell = tr.insertCell();
      planCell.textContent = row.plan;
      planCell.className = 'plan-id';
      tr.insertCell().textContent = row.score === undefined ? '' : row.score.toFixed(6);
    } else {
      const planCell = tr.insertCell();
      planCell.textContent = row.plan;
      planCell.className = 'plan-id';
    }
    for (const crit of criteria) {
      const cell = row.criteria[crit.id];
      const td = tr.insertCell();
      td.className = 'criterion';
      if (cell === undefined) {
        td.textContent = '-';
        continue;
      }
      td.innerHTML =
        `<span class="value">${formatValue(cell.value)}</span>` + barMarkup(cell.fraction);
      td.dataset.fraction = String(cell.fraction);
    }
    tr.addEventListener('click', () => callbacks.onSelect(row));
  }
  container.appendChild(table);
}
