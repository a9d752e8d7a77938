export type Mark = "x" | "o";
export type ResultCode = "c" | "x" | "o" | "d";
export type Mode = "H2H" | "H2C" | "C2H" | "C2C";
export type NavTarget = "first" | "prev" | "next" | "last";

export interface Stats {
  xWinCount: number;
  oWinCount: number;
  drawCount: number;
}

export interface SessionView {
  id: string;
  mode: Mode;
  leadPlayer: Mark;
  board: string[];
  result: ResultCode;
  status: string;
  movesCount: number;
  cursor: number;
  nextPlayer: Mark | null;
  stats: Stats;
  history: string[];
}

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.status = status;
    this.code = code;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function errorFrom(res: Response): Promise<ApiError> {
  let code = "HttpError";
  let message = `HTTP ${res.status}`;
  try {
    const body = (await res.json()) as { code?: string; message?: string };
    if (typeof body.code === "string") code = body.code;
    if (typeof body.message === "string") message = body.message;
  } catch {
    // non-JSON error body; keep the generic message
  }
  return new ApiError(res.status, code, message);
}

/** Thin typed client for the game-set service. The fetch implementation is
 * injectable so tests can script the server side. */
export class Client {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(base = "", fetchImpl: FetchLike = (input, init) => fetch(input, init)) {
    this.base = base.replace(/\/$/, "");
    this.fetchImpl = fetchImpl;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const res = await this.fetchImpl(this.base + path, init);
    if (!res.ok) {
      throw await errorFrom(res);
    }
    return res.json() as Promise<T>;
  }

  createSession(mode: Mode, leadPlayer: Mark): Promise<SessionView> {
    return this.request("POST", "/sessions", { mode, leadPlayer });
  }

  getSession(id: string): Promise<SessionView> {
    return this.request("GET", `/sessions/${id}`);
  }

  playMove(id: string, row: number, col: number): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/moves`, { row, col });
  }

  aiMove(id: string): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/ai-move`);
  }

  navigate(id: string, target: NavTarget): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/navigate`, { target });
  }

  initialize(id: string): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/initialize`);
  }

  setUp(id: string, mode: Mode, leadPlayer: Mark): Promise<SessionView> {
    return this.request("PUT", `/sessions/${id}/setup`, { mode, leadPlayer });
  }

  stop(id: string): Promise<Stats> {
    return this.request("POST", `/sessions/${id}/stop`);
  }
}
