package com.example.results.model;

public class InternalTestResult extends TestResult {
    private String testId;
}
