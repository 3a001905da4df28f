import { readNdjson } from "./ndjson.js";
import type { AgentEvent, BcfRecord, MeshDocument, Metrics, SessionStatus } from "./types.js";

export class HttpError extends Error {
  constructor(public readonly status: number, message: string) {
    super(message);
  }
}

async function expectOk(response: Response): Promise<Response> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // keep the status text
    }
    throw new HttpError(response.status, detail);
  }
  return response;
}

export interface SessionInfo {
  session_id: string;
  status: SessionStatus;
  event_count: number;
}

// Thin typed client over the session service. The UI is a pure consumer:
// it only ever creates sessions, posts instructions/selection and reads.
export class ApiClient {
  constructor(private readonly baseUrl: string) {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  async createSession(seed = 0): Promise<string> {
    const response = await expectOk(
      await fetch(this.url("/sessions"), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ seed }),
      }),
    );
    const body = (await response.json()) as { session_id: string };
    return body.session_id;
  }

  async sessionInfo(sessionId: string): Promise<SessionInfo> {
    const response = await expectOk(await fetch(this.url(`/sessions/${sessionId}`)));
    return (await response.json()) as SessionInfo;
  }

  // Posts an instruction and forwards each streamed event; resolves when the
  // turn's stream closes.
  async sendInstruction(
    sessionId: string,
    text: string,
    onEvent: (event: AgentEvent) => void,
  ): Promise<void> {
    const response = await expectOk(
      await fetch(this.url(`/sessions/${sessionId}/messages`), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ text }),
      }),
    );
    if (!response.body) throw new Error("event stream without a body");
    await readNdjson<AgentEvent>(response.body, onEvent);
  }

  async fetchEvents(sessionId: string, since = 0): Promise<AgentEvent[]> {
    const response = await expectOk(
      await fetch(this.url(`/sessions/${sessionId}/events?since=${since}`)),
    );
    return (await response.json()) as AgentEvent[];
  }

  async fetchMesh(sessionId: string): Promise<MeshDocument> {
    const response = await expectOk(await fetch(this.url(`/sessions/${sessionId}/model/mesh`)));
    return (await response.json()) as MeshDocument;
  }

  async fetchIssues(sessionId: string): Promise<BcfRecord[]> {
    const response = await expectOk(await fetch(this.url(`/sessions/${sessionId}/issues`)));
    return (await response.json()) as BcfRecord[];
  }

  async fetchMetrics(sessionId: string): Promise<Metrics> {
    const response = await expectOk(await fetch(this.url(`/sessions/${sessionId}/metrics`)));
    return (await response.json()) as Metrics;
  }

  async setSelection(sessionId: string, uuids: string[]): Promise<void> {
    await expectOk(
      await fetch(this.url(`/sessions/${sessionId}/selection`), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ uuids }),
      }),
    );
  }
}
