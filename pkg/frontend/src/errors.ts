/** Named failure modes for the figure renderer.
 *
 * Every error carries a stable `name` so callers (and the CLI) can report
 * which contract was broken without string-matching messages.
 */

export class RenderError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "RenderError";
  }
}

export class MissingFileError extends RenderError {
  readonly path: string;

  constructor(path: string) {
    super(`input CSV not found: ${path}`);
    this.name = "MissingFileError";
    this.path = path;
  }
}

export class EmptyCsvError extends RenderError {
  readonly path: string;

  constructor(path: string) {
    super(`input CSV has no data rows: ${path}`);
    this.name = "EmptyCsvError";
    this.path = path;
  }
}

export class MissingColumnError extends RenderError {
  readonly path: string;
  readonly column: string;

  constructor(path: string, column: string, available: string[]) {
    super(
      `column ${JSON.stringify(column)} absent from ${path} ` +
        `(available: ${available.join(", ")})`,
    );
    this.name = "MissingColumnError";
    this.path = path;
    this.column = column;
  }
}

export class BadNumberError extends RenderError {
  readonly path: string;
  readonly column: string;

  constructor(path: string, column: string, raw: string, row: number) {
    super(
      `non-numeric value ${JSON.stringify(raw)} in column ` +
        `${JSON.stringify(column)} of ${path} (data row ${row})`,
    );
    this.name = "BadNumberError";
    this.path = path;
    this.column = column;
  }
}

export class UnknownFigureError extends RenderError {
  constructor(id: string, known: string[]) {
    super(`unknown figure id ${JSON.stringify(id)} (known: ${known.join(", ")})`);
    this.name = "UnknownFigureError";
  }
}

export class UsageError extends RenderError {
  constructor(message: string) {
    super(message);
    this.name = "UsageError";
  }
}
