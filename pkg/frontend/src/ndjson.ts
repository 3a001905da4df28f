// Newline-delimited JSON reader over a fetch body stream.

export async function readNdjson<T>(
  body: ReadableStream<Uint8Array>,
  onRecord: (record: T) => void,
): Promise<void> {
  const reader = body.getReader();
  const decoder = new TextDecoder("utf-8");
  let buffer = "";
  for (;;) {
    const { value, done } = await reader.read();
    if (done) break;
    buffer += decoder.decode(value, { stream: true });
    const lines = buffer.split("\n");
    buffer = lines.pop() ?? "";
    for (const line of lines) {
      const trimmed = line.trim();
      if (!trimmed) continue;
      onRecord(JSON.parse(trimmed) as T);
    }
  }
  const rest = buffer.trim();
  if (rest) onRecord(JSON.parse(rest) as T);
}
