#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Hand-written expected descriptions for the fixture corpus.

Every document below is spelled out by hand from the Java sources under
projects/ and the OAS mapping rules documented in README.md. This script only
pretty-prints them into golden/ (2-space JSON, trailing newline); it never
runs the analyzer.

    python3 tests/fixtures/golden_oracle.py
"""
import json
import pathlib

HERE = pathlib.Path(__file__).resolve().parent
OUT = HERE / "golden"

STRING = {"type": "string"}
INT32 = {"type": "integer", "format": "int32"}
INT64 = {"type": "integer", "format": "int64"}
NUMBER = {"type": "number"}
BOOLEAN = {"type": "boolean"}
UNSPECIFIED = {}


def ref(name):
    return {"$ref": "#/components/schemas/" + name}


def array(items):
    return {"type": "array", "items": items}


def mapping(value):
    return {"type": "object", "additionalProperties": value}


def obj(properties, required=()):
    out = {}
    if required:
        out["required"] = list(required)
    out["type"] = "object"
    if properties:
        out["properties"] = dict(properties)
    return out


def all_of(parent, own_properties, required=()):
    return {"allOf": [ref(parent), obj(own_properties, required)]}


def with_pattern(schema, pattern):
    out = dict(schema)
    out["pattern"] = pattern
    return out


def param(name, location, schema, required=True):
    return {"name": name, "in": location, "required": required, "schema": schema}


def body(schema, name, required=True):
    return {
        "content": {"application/json": {"schema": schema}},
        "required": required,
        "x-name": name,
    }


REASONS = {
    "200": "OK",
    "201": "Created",
    "204": "No Content",
    "400": "Bad Request",
    "403": "Forbidden",
    "404": "Not Found",
    "409": "Conflict",
    "500": "Internal Server Error",
}


def resp(status, schema=None):
    out = {"description": REASONS[status]}
    if schema is not None:
        out["content"] = {"application/json": {"schema": schema}}
    return out


def op(responses, parameters=(), request_body=None):
    out = {}
    if parameters:
        out["parameters"] = list(parameters)
    if request_body is not None:
        out["requestBody"] = request_body
    out["responses"] = {status: r for status, r in sorted(responses.items())}
    return out


def doc(project, profile, paths, schemas, version="0.0.0"):
    title = project if profile == "default" else f"{project} ({profile})"
    return {
        "openapi": "3.0.3",
        "info": {"title": title, "version": version},
        "x-profile": profile,
        "paths": {p: paths[p] for p in sorted(paths)},
        "components": {"schemas": {n: schemas[n] for n in sorted(schemas)}},
    }


DOCS = {}


def emit(project, profile, paths, schemas, **kw):
    DOCS[f"{project}-{profile}.openapi.json"] = doc(project, profile, paths, schemas, **kw)


# --- profile_split: external/internal controllers share POST /testresult ----
tan_paths = {
    "/version/v1/tan": {
        "post": op({"201": resp("201", ref("Tan"))},
                   request_body=body(ref("TanRequest"), "request")),
    },
}
tan_schemas = {
    "Tan": obj({"tan": STRING}),
    "TanRequest": obj({"registrationToken": STRING, "responsePadding": STRING}),
}
test_result = obj({"sc": INT64, "labId": STRING, "testResult": INT32,
                   "responsePadding": STRING}, required=["sc", "testResult"])

emit("profile_split", "default", dict(tan_paths), dict(tan_schemas))
emit("profile_split", "external", {
    **tan_paths,
    "/version/v1/status": {
        "get": op({"200": resp("200", STRING)},
                  parameters=[param("X-Request-Padding", "header", STRING)]),
    },
    "/version/v1/testresult": {
        "post": op({"200": resp("200", ref("TestResult"))},
                   request_body=body(ref("RegistrationToken"), "token")),
    },
}, {
    **tan_schemas,
    "RegistrationToken": obj({"registrationToken": STRING, "responsePadding": STRING},
                             required=["registrationToken"]),
    "TestResult": test_result,
})
emit("profile_split", "internal", {
    **tan_paths,
    "/version/v1/status/{id}": {
        "get": op({"200": resp("200")}, parameters=[param("id", "path", STRING)]),
    },
    "/version/v1/testresult": {
        "post": op({"200": resp("200", ref("InternalTestResult")), "404": resp("404")},
                   request_body=body(ref("HashedGuid"), "guid")),
    },
}, {
    **tan_schemas,
    "HashedGuid": obj({"id": STRING}, required=["id"]),
    "InternalTestResult": all_of("TestResult", {"testId": STRING}),
    "TestResult": test_result,
})

# --- constant_paths: static final constants, concatenation, static import ---
emit("constant_paths", "default", {
    "/quartz-manager/scheduler": {
        "get": op({"200": resp("200", ref("SchedulerStatus"))}),
    },
    "/quartz-manager/scheduler/run": {"post": op({"200": resp("200")})},
    "/quartz-manager/scheduler/run/now": {"post": op({"200": resp("200")})},
    "/quartz-manager/scheduler/Missing.PATH": {"get": op({"200": resp("200")})},
    "/quartz-manager/triggers/{name}": {
        "get": op({"200": resp("200", STRING)}, parameters=[param("name", "path", STRING)]),
    },
    "/quartz-manager/triggers/v2/all": {"get": op({"200": resp("200", STRING)})},
}, {
    "SchedulerStatus": obj({"running": BOOLEAN, "jobs": INT32}, required=["running", "jobs"]),
}, version="2.1.0")

# --- path_regex: {name:regex} segments become clean paths + schema.pattern --
emit("path_regex", "default", {
    "/api/files/{name}": {
        "get": op({"200": resp("200", STRING)},
                  parameters=[param("name", "path", with_pattern(STRING, ".+"))]),
    },
    "/api/items/{id}": {
        "get": op({"200": resp("200", ref("Report"))},
                  parameters=[param("id", "path", INT64)]),
    },
    "/api/reports/{year}/{month}": {
        "get": op({"200": resp("200", array(ref("Report")))},
                  parameters=[param("year", "path", with_pattern(INT32, "\\d{4}")),
                              param("month", "path", with_pattern(INT32, "[0-9]+"))]),
    },
}, {
    "Report": obj({"title": STRING, "amount": NUMBER}, required=["amount"]),
})

# --- request_mapping_verbs: no verb attribute means all seven verbs ---------
ok_void = op({"200": resp("200")})
emit("request_mapping_verbs", "default", {
    "/printshops": {verb: ok_void for verb in
                    ["get", "post", "put", "delete", "patch", "head", "options"]},
    "/consumers": {
        "get": op({"200": resp("200", STRING)}),
        "post": op({"200": resp("200", STRING)}),
    },
    "/a": {"put": ok_void},
    "/b": {"put": ok_void},
    "/admin": {"delete": ok_void},
}, {})

# --- model_attribute: fields of the object (subclass first) become queries --
emit("model_attribute", "default", {
    "/api/procurements": {
        "get": op({"200": resp("200", array(ref("Procurement")))}, parameters=[
            param("text", "query", STRING, required=False),
            param("procuringEntityId", "query", array(STRING), required=False),
            param("onlyPublished", "query", BOOLEAN, required=False),
            param("region", "query", STRING, required=False),
            param("year", "query", INT32, required=False),
            param("page", "query", INT32, required=False),
        ]),
    },
}, {
    "Procurement": obj({"id": STRING, "amount": NUMBER}, required=["amount"]),
})

# --- request_body: requestBody placement, renamed query/header params -------
org_header = param("X-Organizations", "header", STRING, required=False)
emit("request_body", "default", {
    "/config/scoring": {
        "post": op({"200": resp("200", ref("ScoringResult"))}, parameters=[
            param("sort_by", "query", STRING),
            param("limit", "query", INT32, required=False),
        ], request_body=body(ref("ScoringConfig"), "body")),
    },
    "/config/scoring.project": {
        "get": op({"200": resp("200", STRING)}, parameters=[org_header]),
        "post": op({"200": resp("200", STRING)}, parameters=[org_header],
                   request_body=body(STRING, "scoringProject", required=False)),
    },
}, {
    "ScoringConfig": obj({"project": STRING, "organizations": array(STRING),
                          "timeout": INT64}, required=["timeout"]),
    "ScoringResult": obj({"project": STRING, "score": NUMBER}, required=["score"]),
})

# --- default_responses: void/null -> 200, annotation and body literals ------
job_id = param("id", "path", STRING)
emit("default_responses", "default", {
    "/api/jobs": {
        "post": op({"201": resp("201", ref("Job"))}, request_body=body(ref("Job"), "job")),
    },
    "/api/jobs/{id}": {
        "get": op({"200": resp("200")}, parameters=[job_id]),
        "put": op({"200": resp("200", ref("Job")), "201": resp("201", ref("Job"))},
                  parameters=[job_id], request_body=body(ref("Job"), "job")),
        "delete": op({"200": resp("200")}, parameters=[job_id]),
    },
    "/api/jobs/{id}/pause": {
        "post": op({"204": resp("204")}, parameters=[job_id]),
    },
}, {
    "Job": obj({"id": STRING, "name": STRING, "retries": INT32}, required=["id", "retries"]),
})

# --- exception_precedence: local handler beats advice; supertype matching --
project_id = param("id", "path", INT64)
emit("exception_precedence", "default", {
    "/api/projects/import": {
        "post": op({"200": resp("200"), "403": resp("403")}),
    },
    "/api/projects/{id}": {
        "get": op({"200": resp("200", ref("Project")), "404": resp("404")},
                  parameters=[project_id]),
        "put": op({"200": resp("200"), "409": resp("409")}, parameters=[project_id]),
    },
    "/api/teams/{name}": {
        "get": op({"200": resp("200", ref("Team")), "400": resp("400")},
                  parameters=[param("name", "path", STRING)]),
    },
}, {
    "Project": obj({"id": INT64, "name": STRING}, required=["id"]),
    "Team": obj({"name": STRING}),
})

# --- unresolved_exception: no usable handler -> 500 -------------------------
emit("unresolved_exception", "default", {
    "/export": {
        "get": op({"200": resp("200", STRING), "500": resp("500")}),
        "post": op({"200": resp("200"), "500": resp("500")}),
    },
}, {})

# --- allof_inheritance: derived classes compose parent ref + own fields -----
emit("allof_inheritance", "default", {
    "/animals": {
        "post": op({"200": resp("200")}, request_body=body(ref("Dog"), "dog")),
    },
    "/results/{testId}": {
        "get": op({"200": resp("200", ref("InternalTestResult"))},
                  parameters=[param("testId", "path", STRING)]),
    },
}, {
    "Animal": obj({"name": STRING}),
    "Mammal": all_of("Animal", {"legs": INT32}, required=["legs"]),
    "Dog": all_of("Mammal", {"goodBoy": BOOLEAN}, required=["goodBoy"]),
    "InternalTestResult": all_of("TestResult", {"testId": STRING}),
    "TestResult": test_result,
})

# --- required_fields: @NotNull/@NotEmpty and non-nullable primitives --------
registration = obj({
    "email": STRING,
    "roles": array(STRING),
    "nickname": STRING,
    "age": INT32,
    "score": INT32,
    "active": BOOLEAN,
    "verified": BOOLEAN,
    "initial": STRING,
    "ratio": NUMBER,
    "id": INT64,
}, required=["email", "roles", "age", "active", "initial", "ratio", "id"])
emit("required_fields", "default", {
    "/registrations": {
        "post": op({"200": resp("200", ref("Registration"))},
                   request_body=body(ref("Registration"), "registration")),
    },
}, {"Registration": registration})

# --- map_additional_properties: maps describe their value type --------------
emit("map_additional_properties", "default", {
    "/stats/groups": {"get": op({"200": resp("200", mapping(array(ref("Member"))))})},
    "/stats/raw": {"get": op({"200": resp("200", mapping(UNSPECIFIED))})},
    "/stats/scores": {"get": op({"200": resp("200", mapping(NUMBER))})},
    "/stats/tags": {
        "post": op({"200": resp("200")}, request_body=body(mapping(STRING), "tags")),
    },
}, {
    "Member": obj({"name": STRING, "counters": mapping(INT32)}),
})

# --- raw_wrapper: raw ResponseEntity -> UNSPECIFIED_TYPE; external classes --
emit("raw_wrapper", "default", {
    "/async": {"get": op({"200": resp("200", ref("Item"))})},
    "/legacy": {"get": op({"200": resp("200", ref("UNSPECIFIED_TYPE"))})},
    "/page": {"get": op({"200": resp("200", ref("Page"))})},
    "/wildcard": {"get": op({"200": resp("200", ref("UNSPECIFIED_TYPE"))})},
}, {
    "Item": obj({"sku": STRING}),
    "Page": {"externalDocs": {"description": "org.springframework.data.domain",
                              "url": "urn:java:package:org.springframework.data.domain"}},
    "UNSPECIFIED_TYPE": {},
})

# --- syntax_error: the broken file is skipped, the rest is analyzed ---------
emit("syntax_error", "default", {
    "/api/pastes/{id}": {
        "get": op({"200": resp("200", ref("Paste"))}, parameters=[param("id", "path", STRING)]),
    },
}, {"Paste": obj({"id": STRING, "content": STRING})})


def main():
    OUT.mkdir(exist_ok=True)
    for stale in OUT.glob("*.openapi.json"):
        stale.unlink()
    for name, document in sorted(DOCS.items()):
        text = json.dumps(document, indent=2, ensure_ascii=False) + "\n"
        (OUT / name).write_text(text, encoding="utf-8")
    print(f"wrote {len(DOCS)} golden files to {OUT}")


if __name__ == "__main__":
    main()
