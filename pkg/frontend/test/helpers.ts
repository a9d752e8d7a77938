import { readFileSync } from "node:fs";
import { join } from "node:path";
import { expect } from "vitest";
import type { FetchLike, SessionView } from "../src/api.js";

/** One recorded request/response pair from fixtures/generate.py. */
export interface Exchange {
  method: string;
  path: string;
  body?: unknown;
  status: number;
  response: unknown;
}

export function loadFixture<T>(name: string): T {
  const path = join(process.cwd(), "test", "fixtures", name);
  return JSON.parse(readFileSync(path, "utf8")) as T;
}

/** Fetch double that replays a recorded exchange list in order, failing the
 * test on any request the script does not expect. */
export function scripted(entries: Exchange[]): { fetch: FetchLike; remaining(): number } {
  const queue = [...entries];
  const fetchImpl: FetchLike = async (input, init) => {
    const expected = queue.shift();
    if (!expected) {
      throw new Error(`unexpected request: ${init?.method ?? "GET"} ${input}`);
    }
    expect(`${init?.method ?? "GET"} ${input}`).toBe(`${expected.method} ${expected.path}`);
    if (expected.body === undefined) {
      expect(init?.body).toBeUndefined();
    } else {
      expect(JSON.parse(String(init?.body))).toEqual(expected.body);
    }
    return new Response(JSON.stringify(expected.response), {
      status: expected.status,
      headers: { "Content-Type": "application/json" },
    });
  };
  return { fetch: fetchImpl, remaining: () => queue.length };
}

/** Wait until the app has no request in flight. */
export async function settle(app: { readonly pending: boolean }): Promise<void> {
  do {
    await new Promise((resolve) => setTimeout(resolve, 0));
  } while (app.pending);
}

export const viewsOf = (entries: Exchange[]): SessionView[] =>
  entries
    .filter((entry) => entry.status === 200)
    .map((entry) => entry.response as SessionView)
    .filter((body) => Array.isArray(body.board));
