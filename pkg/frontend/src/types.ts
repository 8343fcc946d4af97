/** Response shapes of the /api/v1 service. */

export interface CriterionMeta {
  id: string;
  label: string;
  direction: 'minimize' | 'maximize';
  unit: string;
}

export interface ProfileInfo {
  name: string;
  degrees: Record<string, string>;
}

export interface MissionMeta {
  tasks: number;
  multi_uav_tasks: number;
  uavs: number;
  gcss: number;
}

export interface MissionInfo {
  id: string;
  num_solutions: number;
  meta: MissionMeta;
}

export interface CriterionCell {
  value: number;
  fraction: number;
}

export interface PlanAssignments {
  id: string;
  task_uavs: Record<string, string[]>;
  orders: Record<string, Record<string, number>>;
  gcs_assign: Record<string, string>;
  path_profiles: Record<string, Record<string, string>>;
  return_profiles: Record<string, string>;
  sensors: Record<string, Record<string, string>>;
  criteria: Record<string, number>;
}

export interface SolutionRow {
  plan: string;
  criteria: Record<string, CriterionCell>;
  assignments: PlanAssignments;
  rank?: number;
  score?: number;
}

export interface SolutionsResponse {
  mission: string;
  profile: string | null;
  method: string | null;
  filtered: boolean;
  solutions: SolutionRow[];
}

export interface DecisionRecord {
  operator: string;
  profile: string;
  mission: string;
  plan: string;
  ts: string;
}

export interface ScoreRow {
  method?: string;
  profile?: string;
  operator?: string;
  mission?: string;
  count: number;
  mean: number;
  median: number;
  sd: number;
}

export interface ScoresResponse {
  group_by: string[];
  rows: ScoreRow[];
  n_decisions: number;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail: unknown;
}
