/** Binary PGM (P5, maxval 255) decoding for the image endpoint payload. */

export interface PgmImage {
  width: number;
  height: number;
  pixels: Uint8Array;
}

function isSpace(byte: number): boolean {
  return byte === 0x20 || byte === 0x09 || byte === 0x0a || byte === 0x0d;
}

/** Read the next whitespace-delimited integer, skipping # comments. */
function nextInt(bytes: Uint8Array, pos: number): [number, number] {
  while (pos < bytes.length) {
    if (isSpace(bytes[pos])) {
      pos++;
    } else if (bytes[pos] === 0x23) {
      while (pos < bytes.length && bytes[pos] !== 0x0a) pos++;
    } else {
      break;
    }
  }
  let value = 0;
  let digits = 0;
  while (pos < bytes.length && bytes[pos] >= 0x30 && bytes[pos] <= 0x39) {
    value = value * 10 + (bytes[pos] - 0x30);
    digits++;
    pos++;
  }
  if (digits === 0) throw new Error("malformed PGM header");
  return [value, pos];
}

export function parsePgm(buffer: ArrayBuffer): PgmImage {
  const bytes = new Uint8Array(buffer);
  if (bytes.length < 2 || bytes[0] !== 0x50 || bytes[1] !== 0x35) {
    throw new Error("not a binary PGM (P5) payload");
  }
  let pos = 2;
  let width: number, height: number, maxval: number;
  [width, pos] = nextInt(bytes, pos);
  [height, pos] = nextInt(bytes, pos);
  [maxval, pos] = nextInt(bytes, pos);
  if (maxval !== 255) throw new Error(`unsupported maxval ${maxval}`);
  pos++; // single whitespace byte before the payload
  const count = width * height;
  if (bytes.length - pos < count) {
    throw new Error(`truncated pixel payload: ${bytes.length - pos} < ${count}`);
  }
  return { width, height, pixels: bytes.slice(pos, pos + count) };
}
