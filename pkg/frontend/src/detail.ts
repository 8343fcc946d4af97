/** Assignment summary side panel: the textual stand-in for the mission map. */

import type { SolutionRow } from './types.js';

function pairLines(nested: Record<string, Record<string, string | number>>): string[] {
  const lines: string[] = [];
  for (const task of Object.keys(nested).sort()) {
    const perUav = nested[task];
    if (!perUav) continue;
    for (const uav of Object.keys(perUav).sort()) {
      lines.push(`${task} / ${uav}: ${perUav[uav]}`);
    }
  }
  return lines;
}

export function renderDetail(container: HTMLElement, row: SolutionRow | null): void {
  container.textContent = '';
  if (row === null) {
    const hint = document.createElement('p');
    hint.className = 'hint';
    hint.textContent = 'Select a plan to inspect its assignments.';
    container.appendChild(hint);
    return;
  }
  const title = document.createElement('h3');
  title.textContent = row.plan;
  container.appendChild(title);

  const a = row.assignments;
  const sections: Array<[string, string[]]> = [
    ['Tasks to UAVs', Object.keys(a.task_uavs).sort().map(
      (t) => `${t}: ${[...(a.task_uavs[t] ?? [])].sort().join(', ')}`)],
    ['Execution order', pairLines(a.orders)],
    ['UAV to GCS', Object.keys(a.gcs_assign).sort().map((u) => `${u}: ${a.gcs_assign[u]}`)],
    ['Path profiles', pairLines(a.path_profiles)],
    ['Return profiles', Object.keys(a.return_profiles).sort().map(
      (u) => `${u}: ${a.return_profiles[u]}`)],
    ['Sensors', pairLines(a.sensors)],
  ];
  for (const [label, lines] of sections) {
    if (lines.length === 0) continue;
    const h = document.createElement('h4');
    h.textContent = label;
    container.appendChild(h);
    const ul = document.createElement('ul');
    for (const line of lines) {
      const li = document.createElement('li');
      li.textContent = line;
      ul.appendChild(li);
    }
    container.appendChild(ul);
  }
}
