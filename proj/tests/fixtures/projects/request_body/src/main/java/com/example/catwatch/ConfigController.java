package com.example.catwatch;

import org.springframework.web.bind.annotation.GetMapping;
import org.springframework.web.bind.annotation.PostMapping;
import org.springframework.web.bind.annotation.RequestBody;
import org.springframework.web.bind.annotation.RequestHeader;
import org.springframework.web.bind.annotation.RequestMapping;
import org.springframework.web.bind.annotation.RequestParam;
import org.springframework.web.bind.annotation.RestController;

@RestController
@RequestMapping("/config")
public class ConfigController {

    @GetMapping("/scoring.project")
    public String getScoringProject(
            @RequestHeader(value = "X-Organizations", required = false) String organizations) {
        return "";
    }

    @PostMapping("/scoring.project")
    public String setScoringProject(@RequestBody(required = false) String scoringProject,
            @RequestHeader(value = "X-Organizations", required = false) String organizations) {
        return scoringProject;
    }

    @PostMapping("/scoring")
    public ScoringResult score(@RequestBody ScoringConfig body,
            @RequestParam("sort_by") String sortBy,
            @RequestParam(name = "limit", required = false) Integer limit) {
        return new ScoringResult();
    }
}
