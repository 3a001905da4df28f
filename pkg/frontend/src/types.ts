// Wire types mirrored from the service (docs/http_api.md, model_json_schema.md).

export type AgentRole =
  | "user"
  | "instruction_enhancer"
  | "architect"
  | "programmer"
  | "reviewer"
  | "interpreter"
  | "checker"
  | "system";

export type EventKind =
  | "message"
  | "code"
  | "interpreter_result"
  | "checker_report"
  | "loop_transition"
  | "human_required";

export interface AgentEvent {
  sequence: number;
  role: string;
  kind: string;
  payload: Record<string, unknown>;
}

export interface MeshGroup {
  uuid: string;
  category: string;
  positions: number[];
  indices: number[];
}

export interface MeshDocument {
  elements: MeshGroup[];
}

export interface BcfRecord {
  Issue: string;
  "Issue description": string;
  "Related element uuids": string[];
}

export interface Metrics {
  issue_series: number[];
  pass_rate: number | null;
}

export type SessionStatus = "idle" | "running" | "awaiting_human" | "terminated";
