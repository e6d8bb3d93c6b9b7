package com.example.quartz.controller;

import com.example.quartz.api.ApiPaths;
import com.example.quartz.model.SchedulerStatus;
import org.springframework.web.bind.annotation.GetMapping;
import org.springframework.web.bind.annotation.PostMapping;
import org.springframework.web.bind.annotation.RequestMapping;
import org.springframework.web.bind.annotation.RestController;

@RestController
@RequestMapping(ApiPaths.SCHEDULER)
public class SchedulerController {
    private static final String RUN = "/run";

    @GetMapping
    public SchedulerStatus status() {
        return new SchedulerStatus();
    }

    @PostMapping(RUN)
    public void run() {
    }

    @PostMapping(RUN + "/" + "now")
    public void runNow() {
    }

    @GetMapping(Missing.PATH)
    public void missing() {
    }
}
